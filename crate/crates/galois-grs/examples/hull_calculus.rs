//! Hull-tracking transforms: decompose a code along its hull, shorten a
//! self-orthogonal MDS code into smaller self-orthogonal MDS codes, and
//! puncture it into MDS codes with prescribed hull dimensions.
//!
//! Run with: cargo run --example hull_calculus

use galois_grs::constructions::{build, ConstructionParams, FamilyParams};
use galois_grs::derive::{decompose, derive_hull_mds, derive_so_mds};
use galois_grs::field::Field;

fn main() {
    let f = Field::new(3, 4, None).unwrap();
    let code = build(
        &f,
        &ConstructionParams {
            e: 1,
            k: None,
            extended: true,
            family: FamilyParams::C {
                x1: 720,
                x2: 772,
                r1: 1,
            },
        },
    )
    .unwrap()
    .code;
    println!(
        "base code: [{},{},{}] over GF(81), 1-Galois self-orthogonal",
        code.n(),
        code.k(),
        code.n() - code.k() + 1
    );

    println!("\nshortened self-orthogonal MDS chain:");
    for s in 1..=5usize {
        let d = derive_so_mds(&code, 1, s, 1).unwrap();
        println!(
            "  s = {s}: [{},{},{}]  hull dim {}  T = {:?}  mds: {:?}",
            d.code.n(),
            d.code.k(),
            d.code.n() - d.code.k() + 1,
            d.code.hull_dim(1).unwrap(),
            d.t,
            d.mds
        );
    }

    println!("\npunctured MDS chain with prescribed hulls:");
    for s in 1..=6usize {
        let d = derive_hull_mds(&code, 1, s, 1).unwrap();
        println!(
            "  s = {s}: [{},{},{}]  hull dim {}  T = {:?}",
            d.code.n(),
            d.code.k(),
            d.code.n() - d.code.k() + 1,
            d.code.hull_dim(1).unwrap(),
            d.t,
        );
    }

    // direct-sum decomposition along the hull
    let (c1, c2) = decompose(&code, 1, 2).unwrap();
    let c2 = c2.unwrap();
    println!(
        "\ndecompose s = 2: C = C1 + C2 with C1 = [{},{}] self-orthogonal, C2 = [{},{}] hull dim {}",
        c1.n(),
        c1.k(),
        c2.n(),
        c2.k(),
        c2.hull_dim(1).unwrap()
    );
}
