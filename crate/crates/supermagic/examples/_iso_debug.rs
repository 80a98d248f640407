use supermagic::composition::HurwitzKind;
use supermagic::field::PrimeField;
use supermagic::isomaps::*;
fn main() {
    let f = PrimeField::gf3();
    for (name, iso) in [
        ("phi2", build_phi2(HurwitzKind::B12, f)),
        ("phi3", build_phi3(HurwitzKind::B12, f)),
    ] {
        match iso {
            Ok(iso) => {
                println!("{name}: hom={:?}", iso.hom);
                for (what, ok) in &iso.extra {
                    println!("   extra: {what}: {ok}");
                }
                if let Some((i, j)) = iso.hom.witness {
                    println!(
                        "   witness labels: {} , {}",
                        iso.domain.space().label(i),
                        iso.domain.space().label(j)
                    );
                }
            }
            Err(e) => println!("{name}: build error: {e}"),
        }
    }
}
