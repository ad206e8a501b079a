//! Tour of exact GF(p^h) arithmetic: tables, Frobenius, trace/norm fibers,
//! power residues, and (p^e+1)-th root extraction.
//!
//! Run with: cargo run --example field_arithmetic

use galois_grs::field::Field;

fn main() {
    let f = Field::new(3, 4, None).unwrap();
    println!("built {:?}: q = {}, omega = w (primitive)", f, f.q());
    println!("modulus (constant term first): {:?}", f.spec().modulus);

    // basic arithmetic on the discrete-log representation
    let w = f.omega();
    let w13 = f.elt(13);
    println!("\nw^13 * w^70      = {}", f.fmt_elt(f.mul(w13, f.elt(70))));
    println!("inv(w^13)        = {}", f.fmt_elt(f.inv(w13).unwrap()));
    println!("w + w^2          = {}", f.fmt_elt(f.add(w, f.elt(2))));
    println!("-1               = {}", f.fmt_elt(f.neg(f.one())));

    // Frobenius and its fixed subfields
    println!("\nsigma(w) = w^3: {}", f.fmt_elt(f.frobenius(w, 1)));
    for e in [1u32, 2] {
        let fixed = f
            .elements()
            .filter(|&x| f.frobenius(x, e) == x)
            .count();
        println!("fixed points of sigma^{e}: {fixed} (= {})", 3u32.pow(e));
    }

    // trace fibers all have size p^(h-e)
    let zeros = f
        .elements()
        .filter(|&x| f.trace_to(x, 1).unwrap().is_zero())
        .count();
    println!("\n|{{x : Tr(x) = 0}}| = {zeros}");

    // norm fibers partition the units
    for b in f.subfield_units(1).unwrap() {
        let size = (0..f.order())
            .filter(|&i| f.norm_to(f.elt(i), 1).unwrap() == b)
            .count();
        println!("norm fiber over {} has size {size}", f.fmt_elt(b));
    }

    // power residues and root extraction: solve v^(p^e+1) = u
    let e = 1;
    let residues = (0..f.order())
        .filter(|&i| f.is_power_residue(f.elt(i), e).unwrap())
        .count();
    println!("\n|E| = |{{x^4}}| = {residues}");
    let u = f.from_int(2);
    let v = f.galois_root(u, e).unwrap();
    println!(
        "galois_root(2, e=1) = {} and {}^4 = {}",
        f.fmt_elt(v),
        f.fmt_elt(v),
        f.fmt_elt(f.pow(v, 4).unwrap())
    );
}
