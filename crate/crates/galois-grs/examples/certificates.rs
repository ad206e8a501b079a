//! Self-orthogonality certificates and dual membership with witness
//! polynomials: the certificate (lambda, h(x)) proves an entire code
//! self-orthogonal with n point checks instead of a k x k x n product.
//!
//! Run with: cargo run --example certificates

use galois_grs::codes::galois_inner;
use galois_grs::constructions::{build, ConstructionParams, FamilyParams};
use galois_grs::field::Field;
use galois_grs::grs::{dual_membership, poly_eval, verify_so_egrs, SoVerdict};

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
                x2: 772,
                r1: 1,
            },
        },
    )
    .unwrap();
    let spec = &built.spec;
    println!(
        "built extended GRS [{}, {}] with lambda = {}, h(x) of degree {}",
        spec.length(),
        spec.k(),
        f.fmt_elt(built.cert.lambda),
        built.cert.degree()
    );

    // the certificate identity -u_i h(a_i) = v_i^(p^e+1) at all points
    match verify_so_egrs(spec, 1, &built.cert).unwrap() {
        SoVerdict::Certified => println!("certificate: Certified (code is 1-Galois self-orthogonal)"),
        SoVerdict::Inconclusive { first_failure } => {
            println!("certificate: Inconclusive at coordinate {first_failure}")
        }
    }

    // dual membership: every codeword polynomial of a self-orthogonal code
    // lies in the dual, with an explicit interpolated witness g(x)
    let fx = vec![f.elt(17), f.elt(3)]; // f(x) = w^17 + w^3 x
    let (member, witness) = dual_membership(spec, 1, &fx).unwrap();
    let g = witness.unwrap();
    println!("\nf(x) = w^17 + w^3 x  ->  dual member: {member}");
    let gdeg = g.iter().rposition(|c| !c.is_zero());
    println!("witness g(x) degree: {gdeg:?} (bound n - k = {})", spec.n_points() - spec.k());

    // cross-check by brute force: the codeword of f pairs to zero with
    // every basis row (codeword in the second slot of the inner product)
    let f_k1 = fx.get(spec.k() - 1).copied().unwrap_or(galois_grs::Felt::ZERO);
    let word: Vec<_> = spec
        .locators()
        .iter()
        .zip(spec.multipliers())
        .map(|(&a, &v)| f.mul(v, poly_eval(&f, &fx, a)))
        .chain(std::iter::once(f_k1)) // the x^(k-1) coefficient coordinate
        .collect();
    let code = &built.code;
    let all_zero = (0..code.k()).all(|r| {
        galois_inner(&f, code.generator().row(r), &word, 1)
            .unwrap()
            .is_zero()
    });
    println!("brute-force inner products all vanish: {all_zero}");
}
