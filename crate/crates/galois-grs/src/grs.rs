//! (Extended) generalized Reed-Solomon codes, the barycentric u_i products,
//! self-orthogonality certificates, and dual-membership testing.

use thiserror::Error;

use crate::codes::{CodeError, LinearCode};
use crate::field::{checked_pow, Felt, Field, FieldError};
use crate::linalg::Matrix;
use crate::provenance::{DerivationRecord, Root};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrsError {
    #[error("code locators must be pairwise distinct")]
    DuplicateLocators,
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("dimension k = {k} out of range for n = {n} (extended: {extended})")]
    BadDimension { k: usize, n: usize, extended: bool },
    #[error("certificate polynomial must be monic")]
    NotMonic,
    #[error("certificate degree {got} exceeds the bound {bound}")]
    DegreeTooHigh { got: i64, bound: i64 },
    #[error("extended certificate requires degree exactly {want}, got {got}")]
    DegreeMismatch { want: i64, got: i64 },
    #[error("certificate variant does not match the code (extended = {spec_extended})")]
    WrongVariant { spec_extended: bool },
    #[error("lambda must be 1 for extended certificates")]
    LambdaNotOne,
    #[error("polynomial degree {got} exceeds k - 1 = {bound}")]
    PolyDegreeTooHigh { got: usize, bound: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// An (extended) GRS code before matrix materialization: locators `a`,
/// column multipliers `v`, dimension `k`. The extended code appends the
/// coefficient of x^(k-1) as an extra coordinate, so its length is n + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsSpec {
    field: Field,
    locators: Vec<Felt>,
    multipliers: Vec<Felt>,
    k: usize,
    extended: bool,
}

/// A certificate (lambda, h(x)) for the self-orthogonality identities; h is
/// monic, stored constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificatePoly {
    pub lambda: Felt,
    pub h_coeffs: Vec<Felt>,
}

/// Certificate check outcome. The certificate is sufficient only, so a failed
/// identity is inconclusive rather than a refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SoVerdict {
    Certified,
    Inconclusive { first_failure: usize },
}

impl CertificatePoly {
    pub fn new(lambda: Felt, mut h_coeffs: Vec<Felt>) -> Result<CertificatePoly, GrsError> {
        if lambda.is_zero() {
            return Err(GrsError::ZeroMultiplier);
        }
        while h_coeffs.last().map_or(false, |c| c.is_zero()) {
            h_coeffs.pop();
        }
        if h_coeffs.last() != Some(&Felt::ONE) {
            return Err(GrsError::NotMonic);
        }
        Ok(CertificatePoly { lambda, h_coeffs })
    }

    /// The constant polynomial h(x) = 1 with lambda = 1.
    pub fn trivial(field: &Field) -> CertificatePoly {
        CertificatePoly {
            lambda: field.one(),
            h_coeffs: vec![field.one()],
        }
    }

    /// lambda = 1, h(x) = x^d.
    pub fn monomial(field: &Field, d: usize) -> CertificatePoly {
        let mut h = vec![Felt::ZERO; d + 1];
        h[d] = field.one();
        CertificatePoly {
            lambda: field.one(),
            h_coeffs: h,
        }
    }

    pub fn degree(&self) -> usize {
        self.h_coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl GrsSpec {
    pub fn new(
        field: Field,
        locators: Vec<Felt>,
        multipliers: Vec<Felt>,
        k: usize,
        extended: bool,
    ) -> Result<GrsSpec, GrsError> {
        let n = locators.len();
        if multipliers.len() != n {
            return Err(GrsError::BadDimension { k, n, extended });
        }
        if n as u64 > field.q() {
            return Err(GrsError::DuplicateLocators);
        }
        let mut seen: Vec<i64> = locators.iter().map(|a| a.encode()).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(GrsError::DuplicateLocators);
        }
        if multipliers.iter().any(|v| v.is_zero()) {
            return Err(GrsError::ZeroMultiplier);
        }
        let kmax = if extended { n + 1 } else { n };
        if k == 0 || k > kmax {
            return Err(GrsError::BadDimension { k, n, extended });
        }
        Ok(GrsSpec {
            field,
            locators,
            multipliers,
            k,
            extended,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn locators(&self) -> &[Felt] {
        &self.locators
    }

    pub fn multipliers(&self) -> &[Felt] {
        &self.multipliers
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn extended(&self) -> bool {
        self.extended
    }

    /// Number of evaluation points (excludes the extended coordinate).
    pub fn n_points(&self) -> usize {
        self.locators.len()
    }

    /// Code length: n, or n + 1 for the extended code.
    pub fn length(&self) -> usize {
        self.locators.len() + usize::from(self.extended)
    }

    pub fn provenance_root(&self) -> Root {
        Root::GrsManual {
            k: self.k,
            extended: self.extended,
            locators: self.locators.iter().map(|a| a.encode()).collect(),
            multipliers: self.multipliers.iter().map(|v| v.encode()).collect(),
        }
    }

    /// Materializes the generator matrix: row j evaluates v_i * a_i^j, the
    /// extended column carries 1 in the x^(k-1) row only. (Extended) GRS
    /// codes are MDS, which the provenance records.
    pub fn generator_matrix(&self) -> Result<LinearCode, GrsError> {
        self.generator_with_root(self.provenance_root())
    }

    pub fn generator_with_root(&self, root: Root) -> Result<LinearCode, GrsError> {
        let f = &self.field;
        let n = self.n_points();
        let len = self.length();
        let mut m = Matrix::zeros(f.clone(), self.k, len);
        let mut powers: Vec<Felt> = self.multipliers.clone();
        for j in 0..self.k {
            for i in 0..n {
                m[(j, i)] = powers[i];
            }
            if j + 1 < self.k {
                for i in 0..n {
                    powers[i] = f.mul(powers[i], self.locators[i]);
                }
            }
        }
        if self.extended {
            m[(self.k - 1, len - 1)] = f.one();
        }
        let record = DerivationRecord {
            root,
            steps: Vec::new(),
            mds_by_construction: true,
        };
        // rank k is structural: any k locator columns form a scaled
        // Vandermonde block
        Ok(LinearCode::from_full_rank(m, record))
    }
}

/// u_i = prod_{j != i} (a_i - a_j)^(-1) for pairwise distinct locators.
pub fn compute_u(field: &Field, locators: &[Felt]) -> Result<Vec<Felt>, GrsError> {
    let n = locators.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut prod = field.one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let d = field.sub(locators[i], locators[j]);
            if d.is_zero() {
                return Err(GrsError::DuplicateLocators);
            }
            prod = field.mul(prod, d);
        }
        out.push(field.inv(prod)?);
    }
    Ok(out)
}

/// Checks the GRS self-orthogonality certificate: lambda * u_i * h(a_i) =
/// v_i^(p^e+1) at every point, with deg(h) <= n - (p^e+1)k + p^e - 1.
pub fn verify_so_grs(
    spec: &GrsSpec,
    e: u32,
    cert: &CertificatePoly,
) -> Result<SoVerdict, GrsError> {
    if spec.extended {
        return Err(GrsError::WrongVariant {
            spec_extended: true,
        });
    }
    check_monic(spec.field(), cert)?;
    let n = spec.n_points() as i64;
    let pe = checked_pow(spec.field().p(), e).expect("p^e fits") as i64;
    let bound = n - (pe + 1) * spec.k as i64 + pe - 1;
    let got = cert.degree() as i64;
    if got > bound {
        return Err(GrsError::DegreeTooHigh { got, bound });
    }
    certificate_identity(spec, e, cert, false)
}

/// Checks the extended certificate: -u_i * h(a_i) = v_i^(p^e+1) with
/// deg(h) = p^e + n - (p^e+1)k exactly and lambda = 1.
pub fn verify_so_egrs(
    spec: &GrsSpec,
    e: u32,
    cert: &CertificatePoly,
) -> Result<SoVerdict, GrsError> {
    if !spec.extended {
        return Err(GrsError::WrongVariant {
            spec_extended: false,
        });
    }
    check_monic(spec.field(), cert)?;
    if cert.lambda != spec.field().one() {
        return Err(GrsError::LambdaNotOne);
    }
    let n = spec.n_points() as i64;
    let pe = checked_pow(spec.field().p(), e).expect("p^e fits") as i64;
    let want = pe + n - (pe + 1) * spec.k as i64;
    let got = cert.degree() as i64;
    if got != want {
        return Err(GrsError::DegreeMismatch { want, got });
    }
    certificate_identity(spec, e, cert, true)
}

fn check_monic(_field: &Field, cert: &CertificatePoly) -> Result<(), GrsError> {
    if cert.h_coeffs.get(cert.degree()) != Some(&Felt::ONE) {
        return Err(GrsError::NotMonic);
    }
    if cert.lambda.is_zero() {
        return Err(GrsError::ZeroMultiplier);
    }
    Ok(())
}

fn certificate_identity(
    spec: &GrsSpec,
    e: u32,
    cert: &CertificatePoly,
    negate: bool,
) -> Result<SoVerdict, GrsError> {
    let f = spec.field();
    let u = compute_u(f, spec.locators())?;
    let pe1 = checked_pow(f.p(), e).expect("p^e fits") as i128 + 1;
    for i in 0..spec.n_points() {
        let hv = poly_eval(f, &cert.h_coeffs, spec.locators()[i]);
        let mut lhs = f.mul(f.mul(cert.lambda, u[i]), hv);
        if negate {
            lhs = f.neg(lhs);
        }
        let rhs = f.pow(spec.multipliers()[i], pe1)?;
        if lhs != rhs {
            return Ok(SoVerdict::Inconclusive { first_failure: i });
        }
    }
    Ok(SoVerdict::Certified)
}

/// Horner evaluation; coefficients constant term first.
pub fn poly_eval(field: &Field, coeffs: &[Felt], x: Felt) -> Felt {
    let mut acc = Felt::ZERO;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

fn poly_degree(coeffs: &[Felt]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Coefficients of prod_i (x - roots[i]), constant term first.
fn poly_from_roots(field: &Field, roots: &[Felt]) -> Vec<Felt> {
    let mut coeffs = vec![field.one()];
    for &r in roots {
        coeffs.push(Felt::ZERO);
        // multiply by (x - r): shift up and subtract r * previous
        let mut next = vec![Felt::ZERO; coeffs.len()];
        for (d, &c) in coeffs[..coeffs.len() - 1].iter().enumerate() {
            next[d + 1] = field.add(next[d + 1], c);
            next[d] = field.sub(next[d], field.mul(r, c));
        }
        coeffs = next;
    }
    coeffs
}

/// Divides P(x) by (x - a) with zero remainder expected (a is a root of P
/// by construction here); returns the quotient.
fn synthetic_divide(field: &Field, p: &[Felt], a: Felt) -> Vec<Felt> {
    let n = p.len();
    let mut q = vec![Felt::ZERO; n - 1];
    let mut carry = Felt::ZERO;
    for d in (0..n - 1).rev() {
        carry = field.add(p[d + 1], field.mul(carry, a));
        q[d] = carry;
    }
    q
}

/// Lagrange interpolation through (points[i], values[i]) using the already
/// computed u_i as barycentric weights. Returns coefficients, constant first.
pub fn interpolate(
    field: &Field,
    points: &[Felt],
    values: &[Felt],
    u: &[Felt],
) -> Vec<Felt> {
    let n = points.len();
    let master = poly_from_roots(field, points);
    let mut acc = vec![Felt::ZERO; n];
    for i in 0..n {
        if values[i].is_zero() {
            continue;
        }
        let qi = synthetic_divide(field, &master, points[i]);
        let scale = field.mul(values[i], u[i]);
        for d in 0..n {
            acc[d] = field.add(acc[d], field.mul(scale, qi[d]));
        }
    }
    acc
}

/// Dual-membership test for the codeword determined by f(x) (deg <= k-1):
/// interpolates the witness g with u_i * g(a_i) = v_i^(p^e+1) * f^(p^e)(a_i)
/// and checks its degree bound (deg <= n-k-1; extended: deg <= n-k together
/// with f_(k-1)^(p^e) = -g_(n-k)). Returns the witness on success.
pub fn dual_membership(
    spec: &GrsSpec,
    e: u32,
    f_coeffs: &[Felt],
) -> Result<(bool, Option<Vec<Felt>>), GrsError> {
    let f = spec.field();
    let k = spec.k();
    if let Some(d) = poly_degree(f_coeffs) {
        if d > k - 1 {
            return Err(GrsError::PolyDegreeTooHigh { got: d, bound: k - 1 });
        }
    }
    let n = spec.n_points();
    let u = compute_u(f, spec.locators())?;
    let pe = checked_pow(f.p(), e).expect("p^e fits") as i128;
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let fv = poly_eval(f, f_coeffs, spec.locators()[i]);
        let t = f.mul(f.pow(spec.multipliers()[i], pe + 1)?, f.frobenius(fv, e));
        values.push(f.div(t, u[i])?);
    }
    let g = interpolate(f, spec.locators(), &values, &u);
    let gdeg = poly_degree(&g);
    if spec.extended {
        let bound = n as i64 - k as i64;
        if gdeg.map_or(false, |d| d as i64 > bound) {
            return Ok((false, None));
        }
        // f_(k-1)^(p^e) must equal -g_(n-k)
        let fk1 = f_coeffs.get(k - 1).copied().unwrap_or(Felt::ZERO);
        let g_nk = if bound >= 0 {
            g.get(bound as usize).copied().unwrap_or(Felt::ZERO)
        } else {
            Felt::ZERO
        };
        if f.frobenius(fk1, e) != f.neg(g_nk) {
            return Ok((false, None));
        }
    } else {
        let bound = n as i64 - k as i64 - 1;
        if gdeg.map_or(false, |d| d as i64 > bound) {
            return Ok((false, None));
        }
    }
    Ok((true, Some(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{galois_inner, Distance, MdsMode, MdsVerdict};

    fn gf(p: u64, h: u32) -> Field {
        Field::new(p, h, None).unwrap()
    }

    #[test]
    fn compute_u_examples() {
        let f = gf(3, 2);
        // a = (0, 1): u = (-1, 1)
        let u = compute_u(&f, &[Felt::ZERO, f.one()]).unwrap();
        assert_eq!(u, vec![f.neg(f.one()), f.one()]);

        // a = all of GF(3): u = (2, 2, 2)
        let f3 = gf(3, 1);
        let a: Vec<Felt> = vec![Felt::ZERO, f3.one(), f3.from_int(2)];
        let u = compute_u(&f3, &a).unwrap();
        assert_eq!(u, vec![f3.from_int(2); 3]);

        // u_i * prod_(j != i) (a_i - a_j) = 1
        let f = gf(5, 2);
        let a: Vec<Felt> = (0..6).map(|i| f.elt(i * 3)).collect();
        let u = compute_u(&f, &a).unwrap();
        for i in 0..a.len() {
            let mut prod = f.one();
            for j in 0..a.len() {
                if i != j {
                    prod = f.mul(prod, f.sub(a[i], a[j]));
                }
            }
            assert_eq!(f.mul(u[i], prod), f.one());
        }
    }

    #[test]
    fn compute_u_rejects_duplicates() {
        let f = gf(3, 2);
        assert!(matches!(
            compute_u(&f, &[f.one(), f.one()]),
            Err(GrsError::DuplicateLocators)
        ));
    }

    #[test]
    fn generator_k1() {
        let f = gf(3, 2);
        let a = vec![Felt::ZERO, f.one(), f.omega()];
        let v = vec![f.one(); 3];
        let spec = GrsSpec::new(f.clone(), a.clone(), v.clone(), 1, false).unwrap();
        let c = spec.generator_matrix().unwrap();
        assert_eq!((c.n(), c.k()), (3, 1));
        assert_eq!(c.generator().row(0), &[f.one(), f.one(), f.one()]);

        let espec = GrsSpec::new(f.clone(), a, v, 1, true).unwrap();
        let ec = espec.generator_matrix().unwrap();
        assert_eq!((ec.n(), ec.k()), (4, 1));
        // k = 1: f is constant, f_(k-1) = f_0, so the row extends by 1
        assert_eq!(ec.generator().row(0), &[f.one(), f.one(), f.one(), f.one()]);
    }

    /// Table-row [6,2,5] instance: locators <w^20>, appended zero, k = 2.
    fn table7_first_row() -> (Field, GrsSpec) {
        let f = gf(3, 4);
        let mut a: Vec<Felt> = (1..=4u64).map(|j| f.elt(j * 60 % 80)).collect();
        a.push(Felt::ZERO);
        let u = compute_u(&f, &a).unwrap();
        let mut v = Vec::new();
        for &ui in &u {
            v.push(f.galois_root(f.neg(ui), 1).unwrap());
        }
        let spec = GrsSpec::new(f.clone(), a, v, 2, true).unwrap();
        (f, spec)
    }

    #[test]
    fn egrs_certificate_and_distance() {
        let (f, spec) = table7_first_row();
        let cert = CertificatePoly::trivial(&f);
        assert_eq!(verify_so_egrs(&spec, 1, &cert).unwrap(), SoVerdict::Certified);

        let code = spec.generator_matrix().unwrap();
        assert_eq!((code.n(), code.k()), (6, 2));
        assert_eq!(code.min_distance(1 << 20), Distance::Exact(5));
        assert_eq!(code.hull(1).unwrap().dim, 2);
        assert_eq!(
            code.is_mds(MdsMode::Exhaustive, 1 << 20, 1),
            MdsVerdict::Mds
        );
    }

    #[test]
    fn egrs_certificate_degree_checks() {
        let (f, spec) = table7_first_row();
        // degree off by one
        let bad = CertificatePoly::monomial(&f, 1);
        assert!(matches!(
            verify_so_egrs(&spec, 1, &bad),
            Err(GrsError::DegreeMismatch { .. })
        ));
        // wrong variant
        assert!(matches!(
            verify_so_grs(&spec, 1, &CertificatePoly::trivial(&f)),
            Err(GrsError::WrongVariant { .. })
        ));
    }

    #[test]
    fn grs_certificate_degree_too_high() {
        let f = gf(3, 4);
        let a: Vec<Felt> = (0..8u64).map(|i| f.elt(i * 10)).collect();
        let v = vec![f.one(); 8];
        let spec = GrsSpec::new(f.clone(), a, v, 2, false).unwrap();
        // bound for e = 1, k = 2: 8 - 4*2 + 3 - 1 = 2
        let toobig = CertificatePoly::monomial(&f, 3);
        assert!(matches!(
            verify_so_grs(&spec, 1, &toobig),
            Err(GrsError::DegreeTooHigh { .. })
        ));
        let nonmonic = CertificatePoly {
            lambda: f.one(),
            h_coeffs: vec![f.from_int(2)],
        };
        assert!(matches!(
            verify_so_grs(&spec, 1, &nonmonic),
            Err(GrsError::NotMonic)
        ));
    }

    #[test]
    fn interpolation_round_trip() {
        let f = gf(5, 2);
        let pts: Vec<Felt> = (0..7u64).map(|i| f.elt(i * 2)).collect();
        let coeffs: Vec<Felt> = vec![f.one(), f.elt(5), Felt::ZERO, f.elt(11)];
        let vals: Vec<Felt> = pts.iter().map(|&x| poly_eval(&f, &coeffs, x)).collect();
        let u = compute_u(&f, &pts).unwrap();
        let got = interpolate(&f, &pts, &vals, &u);
        for (i, &x) in pts.iter().enumerate() {
            assert_eq!(poly_eval(&f, &got, x), vals[i]);
        }
        assert_eq!(poly_degree(&got), Some(3));
    }

    #[test]
    fn dual_membership_zero_poly() {
        let (_f, spec) = table7_first_row();
        let (ok, g) = dual_membership(&spec, 1, &[Felt::ZERO, Felt::ZERO]).unwrap();
        assert!(ok);
        assert!(poly_degree(&g.unwrap()).is_none());
    }

    #[test]
    fn dual_membership_on_certified_spec() {
        let (f, spec) = table7_first_row();
        // every polynomial of degree <= k-1 yields a dual member
        for c0 in [Felt::ZERO, f.one(), f.elt(17)] {
            for c1 in [Felt::ZERO, f.elt(3)] {
                let (ok, _) = dual_membership(&spec, 1, &[c0, c1]).unwrap();
                assert!(ok);
            }
        }
    }

    #[test]
    fn grs_dual_is_mds() {
        // the Euclidean dual of a small GRS code is again MDS
        let f = gf(3, 4);
        for (n, k) in [(8usize, 3usize), (10, 4), (12, 5)] {
            let a: Vec<Felt> = (0..n as u64).map(|i| f.elt(i * 5)).collect();
            let v: Vec<Felt> = (0..n as u64).map(|i| f.elt(i * 7 + 2)).collect();
            let spec = GrsSpec::new(f.clone(), a, v, k, false).unwrap();
            let code = spec.generator_matrix().unwrap();
            let dual = code.galois_dual(0).unwrap();
            assert_eq!(dual.k(), n - k);
            assert_eq!(
                dual.is_mds(MdsMode::Determinant, 1 << 20, 1),
                MdsVerdict::Mds,
                "n={n} k={k}"
            );
        }
    }

    #[test]
    fn dual_membership_matches_brute_force() {
        // random multipliers: compare against inner products with all basis
        // rows of the code, codeword in the second slot.
        let f = gf(3, 3);
        for seed in 0..6u64 {
            let a: Vec<Felt> = (0..9u64).map(|i| f.elt((i * 2 + seed) % 26)).collect();
            let v: Vec<Felt> = (0..9u64).map(|i| f.elt((seed * 5 + i * i) % 26)).collect();
            let spec = GrsSpec::new(f.clone(), a.clone(), v.clone(), 3, false).unwrap();
            let code = spec.generator_matrix().unwrap();
            for fc in [
                vec![f.one()],
                vec![Felt::ZERO, f.one()],
                vec![f.elt(1), f.elt(7), f.elt(13)],
            ] {
                let (claimed, _) = dual_membership(&spec, 1, &fc).unwrap();
                // materialize the codeword of f
                let word: Vec<Felt> = (0..9)
                    .map(|i| f.mul(v[i], poly_eval(&f, &fc, a[i])))
                    .collect();
                let brute = (0..code.k()).all(|r| {
                    galois_inner(&f, code.generator().row(r), &word, 1)
                        .unwrap()
                        .is_zero()
                });
                assert_eq!(claimed, brute, "seed {seed}");
            }
        }
    }
}
