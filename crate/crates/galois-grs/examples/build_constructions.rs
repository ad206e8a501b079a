//! Build one self-orthogonal GRS code per construction family, plus an
//! extended variant, and report parameters, certificate verdicts, and hull
//! dimensions.
//!
//! Run with: cargo run --example build_constructions

use galois_grs::constructions::{build, ConstructionParams, FamilyParams};
use galois_grs::field::Field;

fn show(field: &Field, label: &str, params: &ConstructionParams) {
    let built = build(field, params).unwrap();
    let code = &built.code;
    let hull = code.hull(built.e).unwrap();
    println!(
        "{label}: [{},{},{}]_{{{}^{}}}  e = {}  hull dim = {}  certificate deg = {}",
        code.n(),
        code.k(),
        code.n() - code.k() + 1,
        field.p(),
        field.h(),
        built.e,
        hull.dim,
        built.cert.degree(),
    );
    assert_eq!(hull.dim, code.k(), "construction output is self-orthogonal");
}

fn main() {
    let f81 = Field::new(3, 4, None).unwrap();
    let f625 = Field::new(5, 4, None).unwrap();

    // family A: trace fibers over GF(p^e)
    show(
        &f81,
        "A  (t=1, k=7)      ",
        &ConstructionParams {
            e: 1,
            k: Some(7),
            extended: false,
            family: FamilyParams::A { t: 1 },
        },
    );
    // family B: norm fibers over GF(p^e)^*
    show(
        &f81,
        "B  (t=2, k=10)     ",
        &ConstructionParams {
            e: 1,
            k: Some(10),
            extended: false,
            family: FamilyParams::B { t: 2 },
        },
    );
    // family C: product of two cyclic subgroups
    show(
        &f625,
        "C  (156,48,r1=2)   ",
        &ConstructionParams {
            e: 1,
            k: Some(3),
            extended: false,
            family: FamilyParams::C {
                x1: 156,
                x2: 48,
                r1: 2,
            },
        },
    );
    // family D: cosets of a cyclic subgroup
    show(
        &f625,
        "D  (m=24, r=2, k=4)",
        &ConstructionParams {
            e: 1,
            k: Some(4),
            extended: false,
            family: FamilyParams::D { m: 24, r: 2 },
        },
    );

    println!();
    // extended variants: one mandated dimension each, length n + 1 (A) or
    // n + 2 (B/C/D append the zero locator)
    show(
        &f81,
        "A+ (t=3)           ",
        &ConstructionParams {
            e: 1,
            k: None,
            extended: true,
            family: FamilyParams::A { t: 3 },
        },
    );
    show(
        &f81,
        "B+ (t=1)           ",
        &ConstructionParams {
            e: 1,
            k: None,
            extended: true,
            family: FamilyParams::B { t: 1 },
        },
    );
    show(
        &f81,
        "C+ (720,772,r1=1)  ",
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
    );
    show(
        &f625,
        "D+ (m=12, r=3)     ",
        &ConstructionParams {
            e: 1,
            k: None,
            extended: true,
            family: FamilyParams::D { m: 12, r: 3 },
        },
    );
}
