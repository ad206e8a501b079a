//! Exact arithmetic in GF(p^h) via discrete-log tables and Zech logarithms.
//!
//! Nonzero elements are stored as exponents of a fixed primitive element
//! `omega`; zero is a sentinel. Multiplication is index addition, addition
//! goes through the Zech logarithm table precomputed at construction. All
//! tables are immutable after [`Field`] is built, so a `Field` handle is
//! cheap to clone and safe to share across threads.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::conway::conway_polynomial;

/// Default cap on `q - 1`: fields needing larger exp/log/Zech tables are
/// rejected unless the caller raises the cap explicitly.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

const SENTINEL: u32 = u32::MAX;

/// Errors from field construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("no embedded modulus for GF({p}^{h}); supply one explicitly")]
    UnsupportedField { p: u64, h: u32 },
    #[error("q - 1 = {needed} exceeds the table cap {cap}")]
    FieldTooLarge { needed: u64, cap: u64 },
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("{e} does not divide the extension degree {h}")]
    BadSubfield { e: u32, h: u32 },
    #[error("element is not a (p^{e}+1)-th power residue")]
    NotAResidue { e: u32 },
    #[error("Frobenius exponent {e} out of range 0..={h}")]
    BadFrobenius { e: u32, h: u32 },
    #[error("element encoding {0} out of range")]
    BadEncoding(i64),
}

/// Describes a concrete GF(p^h): the prime, the degree, and the monic
/// irreducible modulus (constant term first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub h: u32,
    pub modulus: Vec<u64>,
}

/// One element of a [`Field`]: the discrete-log index of a nonzero element,
/// or the zero sentinel. Elements carry no field pointer; all operations go
/// through the owning [`Field`].
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Felt(u32);

impl Felt {
    pub const ZERO: Felt = Felt(SENTINEL);
    /// The multiplicative identity (index 0 in every field).
    pub const ONE: Felt = Felt(0);

    pub fn is_zero(self) -> bool {
        self.0 == SENTINEL
    }

    /// Discrete-log index for nonzero elements.
    pub fn index(self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.0)
        }
    }

    /// Encoding used by the export schema: -1 for zero, the index otherwise.
    pub fn encode(self) -> i64 {
        if self.is_zero() {
            -1
        } else {
            self.0 as i64
        }
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "Felt(0)")
        } else {
            write!(f, "Felt(w^{})", self.0)
        }
    }
}

struct FieldData {
    spec: FieldSpec,
    q: u64,
    order: u64,
    /// exp[i] = packed coefficient vector of omega^i.
    exp: Vec<u32>,
    /// log[packed] = i, SENTINEL at 0.
    log: Vec<u32>,
    /// zech[i] = log(1 + omega^i), SENTINEL when the sum is zero.
    zech: Vec<u32>,
    /// p^e mod (q-1) for e = 0..=h.
    frob: Vec<u64>,
    /// log(-1): (q-1)/2 in odd characteristic, 0 for p = 2.
    neg_shift: u64,
}

/// A fully tabulated GF(p^h). Cloning is cheap (shared immutable tables).
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.h())
    }
}

impl Field {
    /// Builds GF(p^h) with the default table cap. With `modulus = None` the
    /// embedded Conway polynomial is used (p in {3,5,7,11,13}, h <= 8) and
    /// `omega` is the residue class of x; a user-supplied modulus must be
    /// monic irreducible of degree h, and `omega` is found by search.
    pub fn new(p: u64, h: u32, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        Field::with_cap(p, h, modulus, DEFAULT_TABLE_CAP)
    }

    /// As [`Field::new`] with an explicit cap on `q - 1`.
    pub fn with_cap(
        p: u64,
        h: u32,
        modulus: Option<&[u64]>,
        cap: u64,
    ) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if h == 0 {
            return Err(FieldError::BadModulus("extension degree must be >= 1".into()));
        }
        let q = checked_pow(p, h).ok_or(FieldError::FieldTooLarge {
            needed: u64::MAX,
            cap,
        })?;
        let cap = cap.min((u32::MAX - 1) as u64);
        if q - 1 > cap {
            return Err(FieldError::FieldTooLarge { needed: q - 1, cap });
        }

        let (modulus, is_conway) = match modulus {
            Some(m) => (m.to_vec(), false),
            None => {
                let m = conway_polynomial(p, h)
                    .ok_or(FieldError::UnsupportedField { p, h })?;
                (m.to_vec(), true)
            }
        };
        validate_modulus(p, h, &modulus)?;
        if !is_conway && !poly_is_irreducible(p, &modulus) {
            return Err(FieldError::ReducibleModulus(p));
        }

        let omega = if is_conway {
            // Conway polynomials are primitive: x generates.
            poly_x_reduced(p, &modulus)
        } else {
            find_generator(p, q, &modulus)
        };

        let data = build_tables(FieldSpec { p, h, modulus }, q, &omega);
        Ok(Field(Arc::new(data)))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u64 {
        self.0.spec.p
    }

    pub fn h(&self) -> u32 {
        self.0.spec.h
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Multiplicative group order q - 1.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn zero(&self) -> Felt {
        Felt::ZERO
    }

    pub fn one(&self) -> Felt {
        Felt(0)
    }

    /// The fixed primitive element.
    pub fn omega(&self) -> Felt {
        Felt(1)
    }

    /// omega^i for 0 <= i < q-1.
    pub fn elt(&self, index: u64) -> Felt {
        Felt((index % self.0.order) as u32)
    }

    /// The image of an integer under the prime-subfield embedding.
    pub fn from_int(&self, n: i64) -> Felt {
        let p = self.p() as i64;
        let c0 = n.rem_euclid(p) as u64;
        if c0 == 0 {
            Felt::ZERO
        } else {
            Felt(self.0.log[c0 as usize])
        }
    }

    /// Coefficient view (constant term first, length h) of an element.
    pub fn coeffs(&self, x: Felt) -> Vec<u64> {
        let h = self.h() as usize;
        let p = self.p();
        let mut packed = if x.is_zero() {
            0u64
        } else {
            self.0.exp[x.0 as usize] as u64
        };
        let mut out = Vec::with_capacity(h);
        for _ in 0..h {
            out.push(packed % p);
            packed /= p;
        }
        out
    }

    /// Element from a coefficient vector (constant term first, length <= h).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Felt {
        let p = self.p();
        let mut packed: u64 = 0;
        for &c in coeffs.iter().rev() {
            packed = packed * p + (c % p);
        }
        if packed == 0 {
            Felt::ZERO
        } else {
            Felt(self.0.log[packed as usize])
        }
    }

    pub fn decode(&self, enc: i64) -> Result<Felt, FieldError> {
        if enc == -1 {
            Ok(Felt::ZERO)
        } else if enc >= 0 && (enc as u64) < self.0.order {
            Ok(Felt(enc as u32))
        } else {
            Err(FieldError::BadEncoding(enc))
        }
    }

    pub fn add(&self, a: Felt, b: Felt) -> Felt {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let ord = self.0.order;
        // a + b = omega^i (1 + omega^(j-i))
        let i = a.0 as u64;
        let j = b.0 as u64;
        let d = (j + ord - i) % ord;
        let z = self.0.zech[d as usize];
        if z == SENTINEL {
            Felt::ZERO
        } else {
            Felt(((i + z as u64) % ord) as u32)
        }
    }

    pub fn neg(&self, a: Felt) -> Felt {
        if a.is_zero() || self.p() == 2 {
            return a;
        }
        let ord = self.0.order;
        Felt(((a.0 as u64 + self.0.neg_shift) % ord) as u32)
    }

    pub fn sub(&self, a: Felt, b: Felt) -> Felt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Felt, b: Felt) -> Felt {
        if a.is_zero() || b.is_zero() {
            return Felt::ZERO;
        }
        let ord = self.0.order;
        Felt(((a.0 as u64 + b.0 as u64) % ord) as u32)
    }

    pub fn inv(&self, a: Felt) -> Result<Felt, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let ord = self.0.order;
        Ok(Felt(((ord - a.0 as u64) % ord) as u32))
    }

    pub fn div(&self, a: Felt, b: Felt) -> Result<Felt, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^n for any integer n; negative n requires nonzero x.
    pub fn pow(&self, x: Felt, n: i128) -> Result<Felt, FieldError> {
        if x.is_zero() {
            return match n {
                0 => Ok(self.one()),
                n if n > 0 => Ok(Felt::ZERO),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        let ord = self.0.order as i128;
        let e = (n % ord + ord) % ord;
        Ok(Felt(((x.0 as u128 * e as u128) % ord as u128) as u32))
    }

    /// sigma^e(x) = x^(p^e) for 0 <= e <= h.
    pub fn frobenius(&self, x: Felt, e: u32) -> Felt {
        let pe = self.0.frob[e as usize];
        if x.is_zero() {
            return x;
        }
        Felt(((x.0 as u128 * pe as u128) % self.0.order as u128) as u32)
    }

    /// Checks the Frobenius exponent range used by the Galois inner product.
    pub fn check_galois_e(&self, e: u32) -> Result<(), FieldError> {
        if e > self.h() {
            Err(FieldError::BadFrobenius { e, h: self.h() })
        } else {
            Ok(())
        }
    }

    /// Relative trace onto GF(p^e): x + x^(p^e) + ... + x^(p^(h-e)).
    pub fn trace_to(&self, x: Felt, e: u32) -> Result<Felt, FieldError> {
        self.check_subfield(e)?;
        let mut acc = Felt::ZERO;
        let mut t = x;
        for _ in 0..self.h() / e {
            acc = self.add(acc, t);
            t = self.frobenius(t, e);
        }
        Ok(acc)
    }

    /// Relative norm onto GF(p^e): x^((q-1)/(p^e-1)), with norm(0) = 0.
    pub fn norm_to(&self, x: Felt, e: u32) -> Result<Felt, FieldError> {
        self.check_subfield(e)?;
        if x.is_zero() {
            return Ok(Felt::ZERO);
        }
        let pe = checked_pow(self.p(), e).expect("subfield order fits");
        let m = self.0.order / (pe - 1);
        Ok(Felt(((x.0 as u128 * m as u128) % self.0.order as u128) as u32))
    }

    pub fn discrete_log(&self, x: Felt) -> Result<u64, FieldError> {
        x.index().map(|i| i as u64).ok_or(FieldError::LogOfZero)
    }

    /// True iff u lies in E = {x^(p^e+1) : x nonzero}, via the power-residue
    /// test d | log(u) with d = gcd(p^e+1, q-1).
    pub fn is_power_residue(&self, u: Felt, e: u32) -> Result<bool, FieldError> {
        let l = self.discrete_log(u)?;
        let a = checked_pow(self.p(), e)
            .and_then(|pe| pe.checked_add(1))
            .expect("p^e+1 fits");
        let d = gcd(a, self.0.order);
        Ok(l % d == 0)
    }

    /// Solves v^(p^e+1) = u, returning omega^s with the smallest nonnegative
    /// exponent s; errors with `NotAResidue` when no solution exists.
    pub fn galois_root(&self, u: Felt, e: u32) -> Result<Felt, FieldError> {
        let l = self.discrete_log(u)?;
        let ord = self.0.order;
        let a = checked_pow(self.p(), e)
            .and_then(|pe| pe.checked_add(1))
            .expect("p^e+1 fits");
        let d = gcd(a, ord);
        if l % d != 0 {
            return Err(FieldError::NotAResidue { e });
        }
        let m = ord / d;
        let a_red = (a / d) % m;
        let inv = mod_inverse(a_red, m).expect("a/d invertible mod m");
        let s = ((l / d) as u128 * inv as u128 % m as u128) as u64;
        Ok(Felt(s as u32))
    }

    /// True iff x lies in the subfield GF(p^e) (e | h), via x^(p^e) = x.
    pub fn in_subfield(&self, x: Felt, e: u32) -> Result<bool, FieldError> {
        self.check_subfield(e)?;
        Ok(self.frobenius(x, e) == x)
    }

    /// All q elements: zero first, then ascending powers of omega.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        std::iter::once(Felt::ZERO).chain((0..self.0.order).map(|i| Felt(i as u32)))
    }

    /// The nonzero elements of the subfield GF(p^e) in ascending discrete
    /// log: omega^0, omega^s, omega^(2s), ... with s = (q-1)/(p^e-1).
    pub fn subfield_units(&self, e: u32) -> Result<Vec<Felt>, FieldError> {
        self.check_subfield(e)?;
        let pe = checked_pow(self.p(), e).expect("subfield order fits");
        let step = self.0.order / (pe - 1);
        Ok((0..pe - 1).map(|i| Felt((i * step) as u32)).collect())
    }

    fn check_subfield(&self, e: u32) -> Result<(), FieldError> {
        if e == 0 || self.h() % e != 0 {
            Err(FieldError::BadSubfield { e, h: self.h() })
        } else {
            Ok(())
        }
    }

    /// Readable rendering: "0", "1", or "w^i".
    pub fn fmt_elt(&self, x: Felt) -> String {
        match x.index() {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(i) => format!("w^{i}"),
        }
    }
}

fn build_tables(spec: FieldSpec, q: u64, omega: &[u64]) -> FieldData {
    let p = spec.p;
    let h = spec.h as usize;
    let ord = q - 1;
    let mut exp = vec![0u32; ord as usize];
    let mut log = vec![SENTINEL; q as usize];

    let mut cur = vec![0u64; h];
    cur[0] = 1;
    for i in 0..ord {
        let packed = pack(p, &cur);
        assert!(
            log[packed as usize] == SENTINEL,
            "generator order defect while tabulating GF({p}^{h})"
        );
        exp[i as usize] = packed as u32;
        log[packed as usize] = i as u32;
        cur = poly_mul_mod(p, &cur, omega, &spec.modulus);
    }
    assert_eq!(pack(p, &cur), 1, "generator does not have full order");

    let mut zech = vec![SENTINEL; ord as usize];
    for i in 0..ord as usize {
        let v = exp[i] as u64;
        let c0 = v % p;
        let v2 = if c0 + 1 == p { v - (p - 1) } else { v + 1 };
        zech[i] = if v2 == 0 { SENTINEL } else { log[v2 as usize] };
    }

    let mut frob = Vec::with_capacity(h + 1);
    let mut pe: u64 = 1 % ord.max(1);
    for _ in 0..=h {
        frob.push(if ord == 0 { 0 } else { pe % ord });
        pe = ((pe as u128 * p as u128) % ord.max(1) as u128) as u64;
    }

    let neg_shift = if p == 2 { 0 } else { ord / 2 };
    FieldData {
        spec,
        q,
        order: ord,
        exp,
        log,
        zech,
        frob,
        neg_shift,
    }
}

fn validate_modulus(p: u64, h: u32, m: &[u64]) -> Result<(), FieldError> {
    if m.len() != h as usize + 1 {
        return Err(FieldError::BadModulus(format!(
            "modulus must have degree {h} ({} coefficients)",
            h + 1
        )));
    }
    if m[h as usize] != 1 {
        return Err(FieldError::BadModulus("modulus must be monic".into()));
    }
    if m.iter().any(|&c| c >= p) {
        return Err(FieldError::BadModulus(format!(
            "modulus coefficients must lie in 0..{p}"
        )));
    }
    Ok(())
}

fn pack(p: u64, coeffs: &[u64]) -> u64 {
    let mut v = 0u64;
    for &c in coeffs.iter().rev() {
        v = v * p + c;
    }
    v
}

/// x reduced mod f, as a length-h coefficient vector.
fn poly_x_reduced(p: u64, f: &[u64]) -> Vec<u64> {
    let h = f.len() - 1;
    if h == 1 {
        vec![(p - f[0]) % p]
    } else {
        let mut v = vec![0u64; h];
        v[1] = 1;
        v
    }
}

/// (a * b) mod f over GF(p); a, b of length h = deg f.
fn poly_mul_mod(p: u64, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    let h = f.len() - 1;
    let mut prod = vec![0u64; 2 * h - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for i in (h..2 * h - 1).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for j in 0..h {
                let sub = (c * f[j]) % p;
                prod[i - h + j] = (prod[i - h + j] + p - sub) % p;
            }
        }
    }
    prod.truncate(h);
    prod
}

fn poly_pow_mod(p: u64, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let h = f.len() - 1;
    let mut result = vec![0u64; h];
    result[0] = 1;
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(p, &result, &b, f);
        }
        b = poly_mul_mod(p, &b, &b, f);
        e >>= 1;
    }
    result
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// gcd degree of (a, f) over GF(p); a reduced mod f already.
fn poly_gcd_is_one(p: u64, a: &[u64], f: &[u64]) -> bool {
    let mut big = f.to_vec();
    let mut small = a.to_vec();
    loop {
        let ds = match poly_deg(&small) {
            None => return poly_deg(&big) == Some(0),
            Some(d) => d,
        };
        let db = match poly_deg(&big) {
            None => return ds == 0,
            Some(d) => d,
        };
        if db < ds {
            std::mem::swap(&mut big, &mut small);
            continue;
        }
        let inv = mod_inverse(small[ds], p).expect("leading coeff invertible");
        let c = (big[db] * inv) % p;
        let shift = db - ds;
        for j in 0..=ds {
            let sub = (c * small[j]) % p;
            big[j + shift] = (big[j + shift] + p - sub) % p;
        }
    }
}

fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let h = f.len() - 1;
    if h == 1 {
        return true;
    }
    let x = poly_x_reduced(p, f);
    // gcd(x^(p^i) - x, f) = 1 for i <= h/2, and x^(p^h) = x.
    let mut t = x.clone();
    for _ in 1..=h / 2 {
        t = poly_pow_mod(p, &t, p, f);
        let mut diff = t.clone();
        for j in 0..h {
            diff[j] = (diff[j] + p - x[j]) % p;
        }
        if !poly_gcd_is_one(p, &diff, f) {
            return false;
        }
    }
    let mut t2 = x.clone();
    for _ in 0..h {
        t2 = poly_pow_mod(p, &t2, p, f);
    }
    t2 == x
}

/// Least packed-value element of full multiplicative order q-1.
fn find_generator(p: u64, q: u64, f: &[u64]) -> Vec<u64> {
    let h = f.len() - 1;
    let ord = q - 1;
    let factors = prime_factors(ord);
    let one = {
        let mut v = vec![0u64; h];
        v[0] = 1;
        v
    };
    for packed in 2..q {
        let cand = unpack(p, h, packed);
        let full = factors
            .iter()
            .all(|&r| poly_pow_mod(p, &cand, ord / r, f) != one);
        if full {
            return cand;
        }
    }
    unreachable!("every finite field has a generator");
}

fn unpack(p: u64, h: usize, mut v: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(h);
    for _ in 0..h {
        out.push(v % p);
        v /= p;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn checked_pow(p: u64, h: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..h {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm_u128(a: u64, b: u64) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a as u128 / gcd(a, b) as u128 * b as u128
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(((old_s % m as i128 + m as i128) % m as i128) as u64)
}
