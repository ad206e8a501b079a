//! Acceptance suite: one test per criterion, each printing a pass line.
//! All algebra is exact; every comparison is equality, no tolerances.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion summary lines.

use galois_grs::codes::{
    Distance, LinearCode, MdsMode, MdsVerdict, DEFAULT_ENUM_BUDGET, DEFAULT_MINOR_BUDGET,
};
use galois_grs::constructions::{
    build, closed_form_u, locators, so_targets, ConstructionParams, FamilyParams,
};
use galois_grs::derive::{derive_hull_mds, derive_so_mds};
use galois_grs::field::Field;
use galois_grs::grs::{compute_u, verify_so_egrs, SoVerdict};
use galois_grs::quantum::{hermitian_to_quantum, singleton_check};
use galois_grs::tables::{manifest, reproduce, Depth, Feasibility, TableId, TableRows};

fn gf(p: u64, h: u32) -> Field {
    Field::new(p, h, None).unwrap()
}

fn params(e: u32, k: Option<usize>, extended: bool, family: FamilyParams) -> ConstructionParams {
    ConstructionParams {
        e,
        k,
        extended,
        family,
    }
}

/// Strongest MDS verification within the module's default budgets; returns
/// the mode that ran.
fn mds_ladder(code: &LinearCode, seed: u64) -> (&'static str, MdsVerdict) {
    let v = code.is_mds(MdsMode::Exhaustive, DEFAULT_ENUM_BUDGET, seed);
    if v != MdsVerdict::Unknown {
        return ("exhaustive", v);
    }
    let v = code.is_mds(MdsMode::Determinant, DEFAULT_MINOR_BUDGET, seed);
    if v != MdsVerdict::Unknown {
        return ("determinant", v);
    }
    (
        "sampled",
        code.is_mds(MdsMode::Sampled { trials: 1000 }, u64::MAX, seed),
    )
}

#[test]
fn criterion_1_table7_reproduction() {
    let TableRows::Classical(rows) = manifest(TableId::T7) else {
        unreachable!()
    };
    assert_eq!(rows.len(), 9);
    let mut modes = Vec::new();
    for row in &rows {
        let field = gf(row.p, row.h);
        let built = build(&field, &row.params(None)).unwrap();
        assert_eq!(built.code.n() as u64, row.expect_n, "{}", row.label());
        assert_eq!(built.code.k() as u64, row.expect_k, "{}", row.label());
        // extended certificate: -u_i h(a_i) = v_i^(p^e+1)
        assert_eq!(
            verify_so_egrs(&built.spec, 1, &built.cert).unwrap(),
            SoVerdict::Certified,
            "{}",
            row.label()
        );
        // full e-Galois self-orthogonality by rank
        assert_eq!(
            built.code.hull(1).unwrap().dim,
            built.code.k(),
            "{}",
            row.label()
        );
        let (mode, verdict) = mds_ladder(&built.code, 7);
        assert!(verdict.is_positive(), "{}: {verdict:?}", row.label());
        modes.push(format!("[{},{}]:{mode}", row.expect_n, row.expect_k));
    }
    println!("criterion 1: PASS - 9/9 Table 7 rows certified, hull-full, MDS ({})", modes.join(" "));
}

#[test]
fn criterion_2_table6_reproduction() {
    let TableRows::Classical(rows) = manifest(TableId::T6) else {
        unreachable!()
    };
    assert_eq!(rows.len(), 7);
    let field = gf(5, 4);
    let mut modes = Vec::new();
    for row in &rows {
        let built = build(&field, &row.params(Some(row.expect_k as usize))).unwrap();
        assert_eq!(built.code.n() as u64, row.expect_n);
        assert_eq!(built.code.k() as u64, row.expect_k);
        assert!(built.code.is_self_orthogonal(1).unwrap(), "{}", row.label());
        assert_eq!(built.code.hull(1).unwrap().dim, built.code.k());
        let (mode, verdict) = mds_ladder(&built.code, 11);
        assert!(verdict.is_positive(), "{}: {verdict:?}", row.label());
        modes.push(format!("[{},{}]:{mode}", row.expect_n, row.expect_k));
    }
    println!(
        "criterion 2: PASS - 7/7 Table 6 rows at maximal k certified and MDS-checked ({})",
        modes.join(" ")
    );
}

#[test]
fn criterion_3_gf3_8_slow_rows() {
    let field = gf(3, 8);
    // Table 2 row (e = 1, t = 1): [2187, 547]
    let built = build(&field, &params(1, Some(547), false, FamilyParams::A { t: 1 })).unwrap();
    assert_eq!((built.code.n(), built.code.k()), (2187, 547));
    // exact G sigma^e(G)^T = 0 (about 6.5e8 field multiplications)
    assert!(built.code.is_self_orthogonal(1).unwrap());

    // Table 2 row (e = 2, t = 2): [1458, 146]
    let built2 = build(&field, &params(2, Some(146), false, FamilyParams::A { t: 2 })).unwrap();
    assert_eq!((built2.code.n(), built2.code.k()), (1458, 146));
    assert!(built2.code.is_self_orthogonal(2).unwrap());
    println!(
        "criterion 3: PASS - [2187,547] and [1458,146] over GF(3^8) verified G sigma^e(G)^T = 0 exactly"
    );
}

/// Parameter matrix exercising every family's closed-form u formula
/// (plain and extended) per field.
fn oracle_matrix(field: &Field) -> Vec<ConstructionParams> {
    let (p, h) = (field.p(), field.h());
    let mut out = Vec::new();
    match (p, h) {
        (3, 2) => {
            for t in [1, 2, 3] {
                out.push(params(1, None, false, FamilyParams::A { t }));
            }
            out.push(params(1, None, true, FamilyParams::A { t: 3 }));
            for t in [1, 2] {
                out.push(params(1, None, false, FamilyParams::B { t }));
                out.push(params(1, None, true, FamilyParams::B { t }));
            }
            out.push(params(1, None, false, FamilyParams::C { x1: 8, x2: 2, r1: 1 }));
            out.push(params(1, None, true, FamilyParams::C { x1: 8, x2: 2, r1: 1 }));
            out.push(params(1, None, false, FamilyParams::D { m: 4, r: 2 }));
            out.push(params(1, None, true, FamilyParams::D { m: 4, r: 2 }));
            out.push(params(1, None, true, FamilyParams::D { m: 2, r: 2 }));
        }
        (3, 4) => {
            for e in [1u32, 2] {
                for t in [1, 2] {
                    out.push(params(e, None, false, FamilyParams::A { t }));
                }
            }
            out.push(params(1, None, true, FamilyParams::A { t: 3 }));
            out.push(params(2, None, true, FamilyParams::A { t: 9 }));
            for t in [1, 2] {
                out.push(params(1, None, false, FamilyParams::B { t }));
                out.push(params(1, None, true, FamilyParams::B { t }));
            }
            out.push(params(2, None, false, FamilyParams::B { t: 3 }));
            out.push(params(2, None, true, FamilyParams::B { t: 2 }));
            for x2 in [780u64, 770, 775, 772] {
                out.push(params(1, None, true, FamilyParams::C { x1: 720, x2, r1: 1 }));
            }
            out.push(params(1, None, false, FamilyParams::C { x1: 40, x2: 16, r1: 2 }));
            out.push(params(1, None, false, FamilyParams::D { m: 16, r: 1 }));
            out.push(params(1, None, true, FamilyParams::D { m: 4, r: 2 }));
            out.push(params(1, None, true, FamilyParams::D { m: 8, r: 2 }));
            out.push(params(2, None, true, FamilyParams::D { m: 10, r: 4 }));
        }
        (5, 4) => {
            out.push(params(1, None, false, FamilyParams::A { t: 2 }));
            out.push(params(1, None, true, FamilyParams::A { t: 5 }));
            out.push(params(2, None, true, FamilyParams::A { t: 25 }));
            for t in [1, 3] {
                out.push(params(1, None, false, FamilyParams::B { t }));
                out.push(params(1, None, true, FamilyParams::B { t }));
            }
            out.push(params(2, None, true, FamilyParams::B { t: 13 }));
            // table 6 rows (GRS) and table 7 rows (extended)
            out.push(params(1, None, false, FamilyParams::C { x1: 156, x2: 208, r1: 4 }));
            out.push(params(1, None, false, FamilyParams::C { x1: 156, x2: 48, r1: 2 }));
            out.push(params(1, None, true, FamilyParams::C { x1: 780, x2: 416, r1: 2 }));
            out.push(params(1, None, true, FamilyParams::C { x1: 780, x2: 416, r1: 4 }));
            out.push(params(1, None, true, FamilyParams::C { x1: 624, x2: 754, r1: 1 }));
            out.push(params(2, None, true, FamilyParams::C { x1: 312, x2: 48, r1: 2 }));
            out.push(params(1, None, false, FamilyParams::D { m: 24, r: 2 }));
            out.push(params(1, None, true, FamilyParams::D { m: 4, r: 3 }));
            out.push(params(1, None, true, FamilyParams::D { m: 12, r: 3 }));
            out.push(params(2, None, true, FamilyParams::D { m: 13, r: 2 }));
        }
        (3, 6) => {
            for e in [1u32, 3] {
                out.push(params(e, None, false, FamilyParams::A { t: 1 }));
                out.push(params(e, None, false, FamilyParams::A { t: 2 }));
            }
            out.push(params(1, None, true, FamilyParams::A { t: 3 }));
            out.push(params(3, None, true, FamilyParams::A { t: 27 }));
            out.push(params(1, None, false, FamilyParams::B { t: 2 }));
            out.push(params(1, None, true, FamilyParams::B { t: 1 }));
            out.push(params(3, None, false, FamilyParams::B { t: 3 }));
            out.push(params(3, None, true, FamilyParams::B { t: 2 }));
            out.push(params(1, None, false, FamilyParams::C { x1: 728, x2: 28, r1: 1 }));
            out.push(params(1, None, false, FamilyParams::C { x1: 364, x2: 56, r1: 2 }));
            out.push(params(1, None, true, FamilyParams::C { x1: 728, x2: 14, r1: 1 }));
            out.push(params(1, None, false, FamilyParams::D { m: 14, r: 2 }));
            out.push(params(1, None, true, FamilyParams::D { m: 14, r: 2 }));
            out.push(params(3, None, true, FamilyParams::D { m: 28, r: 1 }));
            out.push(params(3, None, true, FamilyParams::D { m: 14, r: 2 }));
        }
        _ => unreachable!("unexpected oracle field"),
    }
    out
}

#[test]
fn criterion_4_closed_form_u_oracle() {
    let mut instances = 0;
    for (p, h) in [(3u64, 2u32), (3, 4), (5, 4), (3, 6)] {
        let field = gf(p, h);
        for cp in oracle_matrix(&field) {
            let (locs, layout) = locators(&field, &cp)
                .unwrap_or_else(|e| panic!("locators p={p} h={h} {cp:?}: {e}"));
            let closed = closed_form_u(&field, &cp, &locs, &layout).unwrap();
            let brute = compute_u(&field, &locs).unwrap();
            assert_eq!(
                closed, brute,
                "closed-form u mismatch: p={p} h={h} {:?} ext={}",
                cp.family, cp.extended
            );
            // the residue handed to root extraction lies in GF(p^e)^*
            let targets = so_targets(&field, &cp, &locs, &closed).unwrap();
            for &t in &targets {
                assert!(field.in_subfield(t, cp.e).unwrap());
                assert!(field.is_power_residue(t, cp.e).unwrap());
            }
            instances += 1;
        }
    }
    println!("criterion 4: PASS - closed-form u = brute force on {instances} instances over GF(3^2,3^4,5^4,3^6)");
}

#[test]
fn criterion_5_subfield_residue_equivalence() {
    let mut tested = 0;
    for (p, h) in [
        (3u64, 2u32),
        (3, 3),
        (3, 4),
        (3, 6),
        (5, 2),
        (5, 4),
        (7, 2),
    ] {
        let field = gf(p, h);
        for e in 1..=h {
            if h % e != 0 {
                continue;
            }
            let all_in = field
                .subfield_units(e)
                .unwrap()
                .into_iter()
                .all(|u| field.is_power_residue(u, e).unwrap());
            assert_eq!(
                all_in,
                h % (2 * e) == 0,
                "GF({p}^{e})* subset of E iff 2e|h fails at p={p} h={h} e={e}"
            );
            tested += 1;
        }
    }
    println!("criterion 5: PASS - subfield-units-in-E equivalence exhaustive over 7 fields ({tested} (field,e) pairs)");
}

#[test]
fn criterion_6_hull_calculus_chains() {
    // [22,6,17] over GF(3^4): table row (720, 772, 1, 20)
    let f81 = gf(3, 4);
    let code34 = build(
        &f81,
        &params(1, None, true, FamilyParams::C { x1: 720, x2: 772, r1: 1 }),
    )
    .unwrap()
    .code;
    assert_eq!((code34.n(), code34.k()), (22, 6));
    // determinant-mode MDS proves d = 17 (exhaustive enumeration of 81^6
    // codewords is out of budget)
    assert_eq!(
        code34.is_mds(MdsMode::Determinant, DEFAULT_MINOR_BUDGET, 3),
        MdsVerdict::Mds
    );

    // shortening: [21,5,17], [20,4,17], [19,3,17], [18,2,17], [17,1,17]
    for s in 1..=5usize {
        let d = derive_so_mds(&code34, 1, s, 3).unwrap();
        assert_eq!((d.code.n(), d.code.k()), (22 - s, 6 - s));
        assert_eq!(d.code.hull(1).unwrap().dim, 6 - s, "s = {s}");
        assert!(d.mds.is_positive(), "s = {s}: {:?}", d.mds);
        // distance of the shortened code is still n - k + 1 = 17
        if d.code.k() == 1 {
            assert_eq!(d.code.min_distance(1 << 10), Distance::Exact(17));
        }
    }

    // puncturing: [21,6,16] hull 5 down to [16,6,11] hull 0
    for s in 1..=6usize {
        let d = derive_hull_mds(&code34, 1, s, 3).unwrap();
        assert_eq!((d.code.n(), d.code.k()), (22 - s, 6));
        assert_eq!(d.code.hull(1).unwrap().dim, 6 - s, "s = {s}");
        assert!(d.mds.is_positive(), "s = {s}: {:?}", d.mds);
    }

    // [26,5,22] over GF(5^4): table row (624, 754, 1, 24)
    let f625 = gf(5, 4);
    let code54 = build(
        &f625,
        &params(1, None, true, FamilyParams::C { x1: 624, x2: 754, r1: 1 }),
    )
    .unwrap()
    .code;
    assert_eq!((code54.n(), code54.k()), (26, 5));
    for s in 1..=4usize {
        let d = derive_so_mds(&code54, 1, s, 3).unwrap();
        assert_eq!((d.code.n(), d.code.k()), (26 - s, 5 - s));
        assert_eq!(d.code.hull(1).unwrap().dim, 5 - s);
        assert!(d.mds.is_positive());
    }
    for s in 1..=5usize {
        let d = derive_hull_mds(&code54, 1, s, 3).unwrap();
        assert_eq!((d.code.n(), d.code.k()), (26 - s, 5));
        assert_eq!(d.code.hull(1).unwrap().dim, 5 - s);
        assert!(d.mds.is_positive());
    }
    println!("criterion 6: PASS - both shortening and puncturing chains regenerate with rank-verified hulls");
}

#[test]
fn criterion_7_property_suite() {
    // delegated to tests/properties.rs (200 random instances); this entry
    // keeps the acceptance summary complete.
    println!("criterion 7: see properties test target (random_code_property_suite)");
}

#[test]
fn criterion_8_quantum_tables() {
    let mut rows_total = 0;
    for t in [TableId::Q1, TableId::Q2] {
        let rep = reproduce(t, Depth::Fast, 5);
        assert!(rep.all_pass(), "table {}", t.name());
        rows_total += rep.rows.len();
    }
    // every row satisfies the Singleton bound with equality by construction;
    // additionally rebuild the (t = 13, s = 0) row's underlying code
    let f = gf(5, 4);
    let built = build(&f, &params(2, None, true, FamilyParams::B { t: 13 })).unwrap();
    assert_eq!((built.code.n(), built.code.k()), (340, 14));
    assert_eq!(built.code.hull(2).unwrap().dim, 14);
    let qp = hermitian_to_quantum(&built.code, 5).unwrap();
    assert_eq!((qp.n, qp.k, qp.d, qp.base), (340, 312, 15, 25));
    assert!(singleton_check(&qp).is_mds);
    println!(
        "criterion 8: PASS - {rows_total} quantum rows regenerate; [340,14] Hermitian-SO code built and hull-verified"
    );
}

#[test]
fn criterion_9_desk_scale_honesty() {
    // the 5^8/7^8 rows of table 3 are parameters-only and pass arithmetic
    let TableRows::Classical(rows) = manifest(TableId::T3) else {
        unreachable!()
    };
    let big: Vec<_> = rows.iter().filter(|r| r.p >= 5).collect();
    assert_eq!(big.len(), 4);
    for row in &big {
        assert_eq!(row.feasibility(), Feasibility::ParametersOnly, "{}", row.label());
    }
    let rep = reproduce(TableId::T3, Depth::Fast, 5);
    assert!(rep.all_pass());

    // a small-parameter instance of the same 5^8 family, fully verified
    let f = gf(5, 8);
    let built = build(&f, &params(1, Some(4), false, FamilyParams::D { m: 24, r: 2 })).unwrap();
    assert_eq!((built.code.n(), built.code.k()), (48, 4));
    assert_eq!(built.code.hull(1).unwrap().dim, 4);
    assert_eq!(
        built.code.is_mds(MdsMode::Determinant, DEFAULT_MINOR_BUDGET, 5),
        MdsVerdict::Mds
    );
    println!(
        "criterion 9: PASS - 5^8/7^8 giant rows parameters-only (arithmetic exact); D(24,2) at 5^8 fully verified"
    );
}
