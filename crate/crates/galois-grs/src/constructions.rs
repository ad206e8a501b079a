//! The four construction families. Each family picks a locator set with a
//! fiber/coset structure (trace fibers, norm fibers, a product of two cyclic
//! subgroups, or cosets of a cyclic subgroup), evaluates the closed-form
//! u_i for that structure, solves v_i^(p^e+1) = target by root extraction,
//! and certifies the result self-orthogonal. Requires odd p and 2e | h.

use thiserror::Error;

use crate::codes::{CodeError, LinearCode};
use crate::field::{checked_pow, gcd, lcm_u128, Felt, Field, FieldError};
use crate::grs::{
    verify_so_egrs, verify_so_grs, CertificatePoly, GrsError, GrsSpec, SoVerdict,
};
use crate::provenance::Root;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cosets are not pairwise disjoint for the given parameters")]
    CosetCollision,
    #[error("construction produced a non-residue target (internal defect)")]
    NotAResidue,
    #[error("construction certificate failed at coordinate {0} (internal defect)")]
    CertificateFailed(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Grs(#[from] GrsError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Per-family parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    /// Trace fibers over t subfield targets, n = t * p^(h-e).
    A { t: u64 },
    /// Norm fibers over t subfield units, n = t (q-1)/(p^e-1).
    B { t: u64 },
    /// Product of two cyclic subgroups, n = r1 * r2 with r2 = ord(omega^x2).
    C { x1: u64, x2: u64, r1: u64 },
    /// Cosets of a cyclic subgroup of order m, n = r * m.
    D { m: u64, r: u64 },
}

impl FamilyParams {
    pub fn letter(&self) -> &'static str {
        match self {
            FamilyParams::A { .. } => "A",
            FamilyParams::B { .. } => "B",
            FamilyParams::C { .. } => "C",
            FamilyParams::D { .. } => "D",
        }
    }

    pub fn raw(&self) -> Vec<u64> {
        match *self {
            FamilyParams::A { t } | FamilyParams::B { t } => vec![t],
            FamilyParams::C { x1, x2, r1 } => vec![x1, x2, r1],
            FamilyParams::D { m, r } => vec![m, r],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    pub e: u32,
    /// Requested dimension. Mandatory for the GRS variants; extended
    /// variants have a single admissible k, so `None` selects it.
    pub k: Option<usize>,
    pub extended: bool,
    pub family: FamilyParams,
}

/// Fiber index per locator; `None` marks the appended zero point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub fiber: Vec<Option<usize>>,
}

/// Output of a successful build: the materialized spec, its certificate,
/// and the generator-matrix code with construction provenance.
pub struct Built {
    pub spec: GrsSpec,
    pub cert: CertificatePoly,
    pub code: LinearCode,
    pub e: u32,
}

fn validate_common(field: &Field, params: &ConstructionParams) -> Result<(), ConstructError> {
    let p = field.p();
    if p == 2 {
        return Err(ConstructError::InvalidParams(
            "constructions require odd characteristic".into(),
        ));
    }
    let e = params.e;
    if e == 0 || field.h() % (2 * e) != 0 {
        return Err(ConstructError::InvalidParams(format!(
            "2e | h required: e = {e}, h = {}",
            field.h()
        )));
    }
    Ok(())
}

fn pe_of(field: &Field, e: u32) -> u64 {
    checked_pow(field.p(), e).expect("p^e fits in u64")
}

/// Code length n (number of evaluation points, excluding the appended zero
/// point and the extended coordinate).
pub fn base_length(field: &Field, params: &ConstructionParams) -> Result<u64, ConstructError> {
    let p = field.p();
    let h = field.h();
    let q1 = field.order();
    let pe = pe_of(field, params.e);
    Ok(match params.family {
        FamilyParams::A { t } => t * checked_pow(p, h - params.e).unwrap(),
        FamilyParams::B { t } => t * (q1 / (pe - 1)),
        FamilyParams::C { x1: _, x2, r1 } => r1 * (q1 / gcd(q1, x2)),
        FamilyParams::D { m, r } => r * m,
    })
}

/// The family's dimension bound for the GRS variant, or the single
/// mandated k for the extended variant.
pub fn dimension_bound(field: &Field, params: &ConstructionParams) -> Result<u64, ConstructError> {
    validate_family(field, params)?;
    let pe = pe_of(field, params.e);
    let n = base_length(field, params)?;
    if params.extended {
        // all extended families: k = (p^e + len)/(p^e + 1) with len = n for
        // family A and len = n + 1 for B/C/D (appended zero point)
        let len = match params.family {
            FamilyParams::A { .. } => n,
            _ => n + 1,
        };
        debug_assert_eq!((pe + len) % (pe + 1), 0);
        Ok((pe + len) / (pe + 1))
    } else {
        Ok(match params.family {
            FamilyParams::A { .. } => (pe + n - 1) / (pe + 1),
            FamilyParams::B { t } => {
                let q1 = field.order();
                (t - 1) * q1 / (pe * pe - 1)
            }
            FamilyParams::C { .. } | FamilyParams::D { .. } => {
                // n - r2 = r2(r1-1), n - m = m(r-1)
                let block = match params.family {
                    FamilyParams::C { x2, .. } => field.order() / gcd(field.order(), x2),
                    FamilyParams::D { m, .. } => m,
                    _ => unreachable!(),
                };
                (pe + n - block) / (pe + 1)
            }
        })
    }
}

fn validate_family(field: &Field, params: &ConstructionParams) -> Result<(), ConstructError> {
    validate_common(field, params)?;
    let pe = pe_of(field, params.e);
    let q1 = field.order();
    match params.family {
        FamilyParams::A { t } => {
            if t == 0 || t > pe {
                return Err(ConstructError::InvalidParams(format!(
                    "family A requires 1 <= t <= p^e = {pe}, got t = {t}"
                )));
            }
            if params.extended {
                let num = t * checked_pow(field.p(), field.h() - 2 * params.e).unwrap() + 1;
                if num % (pe + 1) != 0 {
                    return Err(ConstructError::InvalidParams(format!(
                        "extended family A requires (p^e+1) | (t p^(h-2e) + 1): {} does not divide {num}",
                        pe + 1
                    )));
                }
            }
        }
        FamilyParams::B { t } => {
            if t == 0 || t > pe - 1 {
                return Err(ConstructError::InvalidParams(format!(
                    "family B requires 1 <= t <= p^e - 1 = {}, got t = {t}",
                    pe - 1
                )));
            }
        }
        FamilyParams::C { x1, x2, r1 } => {
            if x1 == 0 || x2 == 0 {
                return Err(ConstructError::InvalidParams(
                    "family C requires positive x1, x2".into(),
                ));
            }
            if lcm_u128(x1, x2) % q1 as u128 != 0 {
                return Err(ConstructError::InvalidParams(format!(
                    "family C requires (q-1) | lcm(x1, x2); lcm({x1}, {x2}) is not divisible by {q1}"
                )));
            }
            let g2 = gcd(x2, q1);
            if (x1 as u128 * (pe - 1) as u128) % g2 as u128 != 0 {
                return Err(ConstructError::InvalidParams(format!(
                    "family C requires gcd(x2, q-1) | x1 (p^e - 1); {g2} does not divide {x1} * {}",
                    pe - 1
                )));
            }
            let ord1 = q1 / gcd(q1, x1);
            if r1 == 0 || r1 > ord1 {
                return Err(ConstructError::InvalidParams(format!(
                    "family C requires 1 <= r1 <= ord(xi1) = {ord1}, got r1 = {r1}"
                )));
            }
        }
        FamilyParams::D { m, r } => {
            if m == 0 || q1 % m != 0 {
                return Err(ConstructError::InvalidParams(format!(
                    "family D requires m | q - 1 = {q1}, got m = {m}"
                )));
            }
            let y = q1 / (pe - 1);
            let m1 = m / gcd(m, y);
            debug_assert_eq!((pe - 1) % m1, 0);
            let rmax = (pe - 1) / m1;
            if r == 0 || r > rmax {
                return Err(ConstructError::InvalidParams(format!(
                    "family D requires 1 <= r <= (p^e-1)/m1 = {rmax}, got r = {r}"
                )));
            }
        }
    }
    if params.extended {
        match params.family {
            FamilyParams::A { .. } => {}
            _ => {
                let n = base_length(field, params)?;
                if n % (pe + 1) != 0 {
                    return Err(ConstructError::InvalidParams(format!(
                        "extended family {} requires (p^e+1) | n; {} does not divide {n}",
                        params.family.letter(),
                        pe + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Trace targets for family A: b_1 = 0, then subfield units in ascending
/// discrete log.
fn a_targets(field: &Field, e: u32, t: u64) -> Vec<Felt> {
    let mut b = vec![Felt::ZERO];
    b.extend(
        field
            .subfield_units(e)
            .expect("e | h")
            .into_iter()
            .take(t as usize - 1),
    );
    b
}

/// Norm targets for family B: omega'^0, omega'^1, ... with omega' the norm
/// image of omega.
fn b_targets(field: &Field, e: u32, t: u64) -> Vec<Felt> {
    let y = field.order() / (pe_of(field, e) - 1);
    (0..t).map(|i| field.elt(i * y % field.order())).collect()
}

/// Produces the locator vector and the fiber layout for the family.
pub fn locators(
    field: &Field,
    params: &ConstructionParams,
) -> Result<(Vec<Felt>, Layout), ConstructError> {
    validate_family(field, params)?;
    let q1 = field.order();
    let pe = pe_of(field, params.e);
    let mut locs: Vec<Felt> = Vec::new();
    let mut fiber: Vec<Option<usize>> = Vec::new();
    match params.family {
        FamilyParams::A { t } => {
            let targets = a_targets(field, params.e, t);
            for (i, &b) in targets.iter().enumerate() {
                for x in field.elements() {
                    if field.trace_to(x, params.e)? == b {
                        locs.push(x);
                        fiber.push(Some(i));
                    }
                }
            }
        }
        FamilyParams::B { t } => {
            let y = q1 / (pe - 1);
            for i in 0..t {
                for j in 0..y {
                    locs.push(field.elt(i + j * (pe - 1)));
                    fiber.push(Some(i as usize));
                }
            }
        }
        FamilyParams::C { x1, x2, r1 } => {
            let r2 = q1 / gcd(q1, x2);
            for i in 1..=r1 {
                for j in 1..=r2 {
                    let idx = (i as u128 * x1 as u128 + j as u128 * x2 as u128) % q1 as u128;
                    locs.push(field.elt(idx as u64));
                    fiber.push(Some(i as usize - 1));
                }
            }
            check_distinct(&locs)?;
        }
        FamilyParams::D { m, r } => {
            let y = q1 / (pe - 1);
            let m2 = gcd(m, y);
            let theta2_exp = y / m2;
            let theta1_exp = q1 / m;
            for s in 1..=r {
                for t in 1..=m {
                    let idx = (s as u128 * theta2_exp as u128 + t as u128 * theta1_exp as u128)
                        % q1 as u128;
                    locs.push(field.elt(idx as u64));
                    fiber.push(Some(s as usize - 1));
                }
            }
            check_distinct(&locs)?;
        }
    }
    if params.extended && !matches!(params.family, FamilyParams::A { .. }) {
        locs.push(Felt::ZERO);
        fiber.push(None);
    }
    Ok((locs, Layout { fiber }))
}

fn check_distinct(locs: &[Felt]) -> Result<(), ConstructError> {
    let mut idx: Vec<i64> = locs.iter().map(|a| a.encode()).collect();
    idx.sort_unstable();
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructError::CosetCollision);
    }
    Ok(())
}

/// Closed-form u_i per the family's product structure, elementwise equal to the
/// brute-force barycentric product over the same locator list.
pub fn closed_form_u(
    field: &Field,
    params: &ConstructionParams,
    locs: &[Felt],
    layout: &Layout,
) -> Result<Vec<Felt>, ConstructError> {
    let f = field;
    let q1 = f.order();
    let pe = pe_of(f, params.e);
    let appended_zero = params.extended && !matches!(params.family, FamilyParams::A { .. });
    let n_base = locs.len() - usize::from(appended_zero);

    // per-fiber factor prod_(j != s) (label_s - label_j)^{-1}
    let fiber_factor = |labels: &[Felt]| -> Result<Vec<Felt>, ConstructError> {
        let mut out = Vec::with_capacity(labels.len());
        for s in 0..labels.len() {
            let mut prod = f.one();
            for j in 0..labels.len() {
                if j != s {
                    prod = f.mul(prod, f.sub(labels[s], labels[j]));
                }
            }
            out.push(f.inv(prod)?);
        }
        Ok(out)
    };

    let mut u = vec![Felt::ZERO; locs.len()];
    match params.family {
        FamilyParams::A { t } => {
            let targets = a_targets(f, params.e, t);
            let factors = fiber_factor(&targets)?;
            for i in 0..locs.len() {
                u[i] = factors[layout.fiber[i].expect("A has no appended zero")];
            }
        }
        FamilyParams::B { t } => {
            let y = q1 / (pe - 1);
            let targets = b_targets(f, params.e, t);
            let factors = fiber_factor(&targets)?;
            for i in 0..n_base {
                let s = layout.fiber[i].unwrap();
                let a_pow = f.pow(locs[i], 1 - y as i128)?;
                u[i] = f.mul(a_pow, factors[s]);
                if appended_zero {
                    u[i] = f.mul(u[i], f.inv(locs[i])?);
                }
            }
            if appended_zero {
                // (-1)^(n + t(y-1)) * prod b_i^(-1)
                let parity = (n_base as u128 + t as u128 * (y - 1) as u128) % 2;
                let mut prod = f.one();
                for &b in &targets {
                    prod = f.mul(prod, f.inv(b)?);
                }
                if parity == 1 {
                    prod = f.neg(prod);
                }
                u[n_base] = prod;
            }
        }
        FamilyParams::C { x1, x2, r1 } => {
            let r2 = q1 / gcd(q1, x2);
            let xi1 = f.elt(x1 % q1);
            let xi2 = f.elt(x2 % q1);
            // labels xi1^(s r2) for s = 1..r1
            let labels: Vec<Felt> = (1..=r1)
                .map(|s| f.pow(xi1, (s * r2) as i128).unwrap())
                .collect();
            let factors = fiber_factor(&labels)?;
            let r2_inv = f.inv(f.from_int(r2 as i64))?;
            for i in 0..n_base {
                let s = layout.fiber[i].unwrap() as u64 + 1;
                let xi1_pow = f.pow(xi1, -((s * r2) as i128))?;
                u[i] = f.mul(
                    f.mul(locs[i], xi1_pow),
                    f.mul(r2_inv, factors[s as usize - 1]),
                );
                if appended_zero {
                    u[i] = f.mul(u[i], f.inv(locs[i])?);
                }
            }
            if appended_zero {
                // (-1)^n * xi1^(-r1 r2 (r1+1)/2) * xi2^(r1 r2 (r2+1)/2)
                let n = n_base as u128;
                let e1 = r1 as u128 * r2 as u128 * (r1 as u128 + 1) / 2;
                let e2 = r1 as u128 * r2 as u128 * (r2 as u128 + 1) / 2;
                let mut val = f.mul(
                    f.pow(xi1, -((e1 % q1 as u128) as i128))?,
                    f.pow(xi2, (e2 % q1 as u128) as i128)?,
                );
                if n % 2 == 1 {
                    val = f.neg(val);
                }
                u[n_base] = val;
            }
        }
        FamilyParams::D { m, r } => {
            let y = q1 / (pe - 1);
            let m2 = gcd(m, y);
            let theta1 = f.elt(q1 / m % q1);
            let theta2 = f.elt(y / m2 % q1);
            // labels eta_s^m = theta2^(s m) for s = 1..r
            let labels: Vec<Felt> = (1..=r)
                .map(|s| f.pow(theta2, (s as u128 * m as u128 % q1 as u128) as i128).unwrap())
                .collect();
            let factors = fiber_factor(&labels)?;
            let m_inv = f.inv(f.from_int(m as i64))?;
            for i in 0..n_base {
                let s = layout.fiber[i].unwrap();
                let eta_m_inv = f.inv(labels[s])?;
                u[i] = f.mul(f.mul(locs[i], eta_m_inv), f.mul(m_inv, factors[s]));
                if appended_zero {
                    u[i] = f.mul(u[i], f.inv(locs[i])?);
                }
            }
            if appended_zero {
                // (-1)^n * theta1^(-r m(m+1)/2) * prod eta_i^(-m)
                let n = n_base as u128;
                let e1 = r as u128 * m as u128 * (m as u128 + 1) / 2;
                let mut val = f.pow(theta1, -((e1 % q1 as u128) as i128))?;
                for s in 0..r as usize {
                    val = f.mul(val, f.inv(labels[s])?);
                }
                if n % 2 == 1 {
                    val = f.neg(val);
                }
                u[n_base] = val;
            }
        }
    }
    Ok(u)
}

/// The value each family hands to the root extraction: v_i^(p^e+1) equals
/// this target exactly. For the GRS variants it is the family's subfield
/// residue element; for extended variants it is -u_i.
pub fn so_targets(
    field: &Field,
    params: &ConstructionParams,
    locs: &[Felt],
    u: &[Felt],
) -> Result<Vec<Felt>, ConstructError> {
    let f = field;
    let q1 = f.order();
    if params.extended {
        return Ok(u.iter().map(|&ui| f.neg(ui)).collect());
    }
    let power: u64 = match params.family {
        FamilyParams::A { .. } => 0,
        FamilyParams::B { .. } => q1 / (pe_of(f, params.e) - 1) - 1,
        FamilyParams::C { x2, .. } => q1 / gcd(q1, x2) - 1,
        FamilyParams::D { m, .. } => m - 1,
    };
    let mut out = Vec::with_capacity(u.len());
    for (i, &ui) in u.iter().enumerate() {
        let a_pow = f.pow(locs[i], power as i128)?;
        out.push(f.mul(a_pow, ui));
    }
    Ok(out)
}

/// The certificate that witnesses each family's self-orthogonality.
pub fn certificate(field: &Field, params: &ConstructionParams) -> CertificatePoly {
    if params.extended {
        return CertificatePoly::trivial(field);
    }
    let q1 = field.order();
    match params.family {
        FamilyParams::A { .. } => CertificatePoly::trivial(field),
        FamilyParams::B { .. } => {
            let y = q1 / (pe_of(field, params.e) - 1);
            CertificatePoly::monomial(field, y as usize - 1)
        }
        FamilyParams::C { x2, .. } => {
            let r2 = q1 / gcd(q1, x2);
            CertificatePoly::monomial(field, r2 as usize - 1)
        }
        FamilyParams::D { m, .. } => CertificatePoly::monomial(field, m as usize - 1),
    }
}

/// Builds the certified e-Galois self-orthogonal (extended) GRS code.
pub fn build(field: &Field, params: &ConstructionParams) -> Result<Built, ConstructError> {
    let (locs, layout) = locators(field, params)?;
    let u = closed_form_u(field, params, &locs, &layout)?;
    let targets = so_targets(field, params, &locs, &u)?;

    let bound = dimension_bound(field, params)? as usize;
    let k = if params.extended {
        match params.k {
            None => bound,
            Some(k) if k == bound => k,
            Some(k) => {
                return Err(ConstructError::InvalidParams(format!(
                    "extended family {} mandates k = {bound}, got k = {k}",
                    params.family.letter()
                )))
            }
        }
    } else {
        let k = params.k.ok_or_else(|| {
            ConstructError::InvalidParams("k is required for the GRS variants".into())
        })?;
        if bound == 0 || k == 0 || k > bound {
            return Err(ConstructError::InvalidParams(format!(
                "k exceeds bound {bound} for family {}",
                params.family.letter()
            )));
        }
        k
    };

    let mut v = Vec::with_capacity(locs.len());
    for &t in &targets {
        v.push(
            field
                .galois_root(t, params.e)
                .map_err(|_| ConstructError::NotAResidue)?,
        );
    }

    let spec = GrsSpec::new(field.clone(), locs, v, k, params.extended)?;
    let cert = certificate(field, params);
    let verdict = if params.extended {
        verify_so_egrs(&spec, params.e, &cert)?
    } else {
        verify_so_grs(&spec, params.e, &cert)?
    };
    if let SoVerdict::Inconclusive { first_failure } = verdict {
        return Err(ConstructError::CertificateFailed(first_failure));
    }

    let root = Root::Construction {
        family: params.family.letter().to_string(),
        p: field.p(),
        h: field.h(),
        e: params.e,
        k,
        extended: params.extended,
        params: params.family.raw(),
    };
    let code = spec.generator_with_root(root)?;
    Ok(Built {
        spec,
        cert,
        code,
        e: params.e,
    })
}
