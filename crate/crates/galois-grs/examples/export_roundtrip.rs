//! Export/import round trip: build a certified code, serialize the GRS
//! specification and the expanded generator, read both back, and re-verify.
//!
//! Run with: cargo run --example export_roundtrip

use galois_grs::constructions::{build, ConstructionParams, FamilyParams};
use galois_grs::export::{
    code_from_artifact, code_to_artifact, from_json, grs_from_artifact, grs_to_artifact, to_json,
};
use galois_grs::field::Field;
use galois_grs::grs::{verify_so_egrs, SoVerdict};

fn main() {
    let f = Field::new(3, 4, None).unwrap();
    let built = build(
        &f,
        &ConstructionParams {
            e: 1,
            k: None,
            extended: true,
            family: FamilyParams::C {
                x1: 720,
                x2: 780,
                r1: 1,
            },
        },
    )
    .unwrap();

    let grs_json = to_json(&grs_to_artifact(&built.spec, built.e, &built.cert));
    println!("GRS artifact:\n{grs_json}\n");

    let (spec, e, cert) = grs_from_artifact(&from_json(&grs_json).unwrap()).unwrap();
    assert_eq!(spec, built.spec);
    assert_eq!(
        verify_so_egrs(&spec, e, &cert).unwrap(),
        SoVerdict::Certified
    );
    println!("re-imported spec re-certifies: Certified");

    let code_json = to_json(&code_to_artifact(&built.code));
    let back = code_from_artifact(&from_json(&code_json).unwrap()).unwrap();
    assert_eq!(back.generator(), built.code.generator());
    println!(
        "generator artifact round trip is bit-exact ({} x {} entries)",
        back.k(),
        back.n()
    );
}
