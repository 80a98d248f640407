use supermagic::square::*;
use supermagic::field::PrimeField;
fn main() {
    let f = PrimeField::gf3();
    let t0 = std::time::Instant::now();
    for row in square_table(&upper_triangle(), f).unwrap() {
        println!("{},{} -> {}|{}", row.s, row.s_prime, row.even, row.odd);
    }
    println!("elapsed {:?}", t0.elapsed());
}
