//! Quantum MDS parameters: regenerate both published quantum tables from
//! the closed-form (N, K) enumeration, and convert an actually-built
//! Hermitian self-orthogonal code.
//!
//! Run with: cargo run --example quantum_mds

use galois_grs::constructions::{build, ConstructionParams, FamilyParams};
use galois_grs::derive::{enumerate_extended_families, ExtendedFamilyRanges};
use galois_grs::field::Field;
use galois_grs::quantum::{hermitian_to_quantum, singleton_check, quantum_mds_from_shortening};
use galois_grs::tables::{quantum_table_tsv, TableId};

fn main() {
    // both quantum tables as TSV, straight from the manifests
    for t in [TableId::Q1, TableId::Q2] {
        println!("table {}:", t.name());
        print!("{}", quantum_table_tsv(t).unwrap());
        println!();
    }

    // the same rows from the (N, K) enumeration + the shortening formula
    let ranges = ExtendedFamilyRanges {
        t: Some(13..=16),
        ..Default::default()
    };
    println!("condition-ii tuples over GF(5^4), e = 2, t = 13..16:");
    for tuple in enumerate_extended_families(5, 4, 2, &ranges).unwrap() {
        if !matches!(tuple.condition, galois_grs::derive::Condition::II { .. }) {
            continue;
        }
        let qp = quantum_mds_from_shortening(tuple.n_code, tuple.k_code, 0, 25).unwrap();
        println!(
            "  {}  (N,K) = ({},{})  s=0 -> {}  quantum MDS: {}",
            tuple.condition.label(),
            tuple.n_code,
            tuple.k_code,
            qp.display(),
            singleton_check(&qp).is_mds
        );
    }

    // a conversion backed by a real matrix: the [340, 14] Hermitian
    // self-orthogonal extended GRS code over GF(5^4)
    let f = Field::new(5, 4, None).unwrap();
    let built = build(
        &f,
        &ConstructionParams {
            e: 2,
            k: None,
            extended: true,
            family: FamilyParams::B { t: 13 },
        },
    )
    .unwrap();
    println!(
        "\nbuilt [{},{}] over GF(625), hull_2 dim = {}",
        built.code.n(),
        built.code.k(),
        built.code.hull_dim(2).unwrap()
    );
    let qp = hermitian_to_quantum(&built.code, 1).unwrap();
    println!("Hermitian construction gives {}", qp.display());
}
