//! Generic linear-code layer: Galois inner products, duals, hulls, minimum
//! distance, MDS verification, puncturing and shortening.

use thiserror::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Felt, Field, FieldError};
use crate::linalg::{LinalgError, Matrix};
use crate::provenance::{DerivationRecord, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator matrix does not have full row rank")]
    NotFullRank,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coordinate set out of range: {0}")]
    BadCoordinates(usize),
    #[error("resulting code is zero")]
    EmptyResult,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A linear [n, k] code given by a full-row-rank generator matrix.
///
/// Derived codes (duals, hulls, punctured/shortened codes) always carry
/// canonical (reduced row echelon form) generators, so row-space equality
/// is literal matrix equality along a derivation chain. The zero code is
/// representable with a 0-row generator; constructors that would produce it
/// report `EmptyResult` instead unless noted.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
    provenance: DerivationRecord,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}] code over {:?}", self.n(), self.k(), self.field())
    }
}

/// Hull dimension and basis for one Galois parameter.
#[derive(Clone)]
pub struct HullReport {
    pub e: u32,
    pub dim: usize,
    /// Canonical basis of Hull_e(C), dim x n.
    pub basis: Matrix,
}

/// Outcome of a minimum-distance computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// The enumeration budget was exceeded before the distance was proven.
    Unknown,
}

/// How an MDS check was performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsMode {
    /// Enumerate all codewords (up to scalar multiples) within budget.
    Exhaustive,
    /// Check every k x k minor of the generator within budget.
    Determinant,
    /// Check `trials` uniformly random k-column subsets.
    Sampled { trials: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdsWitness {
    /// A codeword of weight below n - k + 1.
    LowWeightWord(Vec<Felt>),
    /// A singular k-column subset.
    SingularColumns(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdsVerdict {
    Mds,
    NotMds(MdsWitness),
    /// Sampled mode only: no counterexample among the trials.
    Probable { trials: u64 },
    /// The budget ran out before the claim was decided.
    Unknown,
}

impl MdsVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, MdsVerdict::Mds | MdsVerdict::Probable { .. })
    }
}

pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 22;
pub const DEFAULT_MINOR_BUDGET: u64 = 1 << 20;

/// The e-Galois inner product (a, b)_e = sum_i a_i * b_i^(p^e).
pub fn galois_inner(field: &Field, a: &[Felt], b: &[Felt], e: u32) -> Result<Felt, CodeError> {
    if a.len() != b.len() {
        return Err(CodeError::DimensionMismatch(format!(
            "inner product of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    field.check_galois_e(e)?;
    let mut acc = Felt::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = field.add(acc, field.mul(x, field.frobenius(y, e)));
    }
    Ok(acc)
}

impl LinearCode {
    /// Wraps a generator matrix, enforcing full row rank and k >= 1.
    pub fn new(gen: Matrix, provenance: DerivationRecord) -> Result<LinearCode, CodeError> {
        if gen.rows() == 0 || gen.rank() != gen.rows() {
            return Err(CodeError::NotFullRank);
        }
        Ok(LinearCode { gen, provenance })
    }

    /// Wraps a generator whose full row rank is guaranteed by construction
    /// (Vandermonde-type matrices); checked only in debug builds.
    pub(crate) fn from_full_rank(gen: Matrix, provenance: DerivationRecord) -> LinearCode {
        if cfg!(debug_assertions) && gen.rows() * gen.cols() < 1 << 20 {
            assert_eq!(gen.rank(), gen.rows(), "full-rank constructor misused");
        }
        LinearCode { gen, provenance }
    }

    /// Code spanned by the rows of `m` (any rank, canonical generator).
    pub fn from_span(m: &Matrix, provenance: DerivationRecord) -> LinearCode {
        let r = m.rref();
        LinearCode {
            gen: r.reduced.take_rows(0..r.rank),
            provenance,
        }
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn provenance(&self) -> &DerivationRecord {
        &self.provenance
    }

    pub fn set_provenance(&mut self, p: DerivationRecord) {
        self.provenance = p;
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    /// True when the provenance chain certifies the MDS property.
    pub fn mds_by_construction(&self) -> bool {
        self.provenance.mds_by_construction
    }

    pub fn contains(&self, word: &[Felt]) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let m = Matrix::from_rows(self.field().clone(), vec![word.to_vec()]).unwrap();
        self.gen.stack(&m).unwrap().rank() == self.k()
    }

    /// The e-Galois dual: all x with x . sigma^e(G)^T = 0. Dimension n - k.
    pub fn galois_dual(&self, e: u32) -> Result<LinearCode, CodeError> {
        self.field().check_galois_e(e)?;
        let basis = self.gen.frobenius_entrywise(e).nullspace();
        Ok(LinearCode {
            gen: basis,
            provenance: self.provenance.with_step(Step::GaloisDual { e }, false),
        })
    }

    /// Hull_e(C) = C intersect C^{perp_e}: dimension k - rank(G sigma^e(G)^T),
    /// basis obtained from the left null space of that k x k product mapped
    /// through G. The returned basis is re-checked against both membership
    /// conditions.
    pub fn hull(&self, e: u32) -> Result<HullReport, CodeError> {
        self.field().check_galois_e(e)?;
        let gram = self.gen.matmul(&self.gen.frobenius_entrywise(e).transpose())?;
        let left_null = gram.transpose().nullspace();
        let basis = left_null.matmul(&self.gen)?.rref().reduced;
        let dim = self.k() - gram.rank();
        let basis = basis.take_rows(0..dim);
        debug_assert!(basis
            .matmul(&self.gen.frobenius_entrywise(e).transpose())
            .unwrap()
            .is_zero());
        debug_assert_eq!(self.gen.stack(&basis).unwrap().rank(), self.k());
        Ok(HullReport { e, dim, basis })
    }

    /// Convenience: dim Hull_e(C).
    pub fn hull_dim(&self, e: u32) -> Result<usize, CodeError> {
        let gram = self.gen.matmul(&self.gen.frobenius_entrywise(e).transpose())?;
        Ok(self.k() - gram.rank())
    }

    /// True iff C is e-Galois self-orthogonal, i.e. G sigma^e(G)^T = 0.
    pub fn is_self_orthogonal(&self, e: u32) -> Result<bool, CodeError> {
        let gram = self.gen.matmul(&self.gen.frobenius_entrywise(e).transpose())?;
        Ok(gram.is_zero())
    }

    /// Exact minimum distance when the projective codeword count fits the
    /// budget, `Unknown` otherwise.
    pub fn min_distance(&self, budget: u64) -> Distance {
        if self.k() == 0 {
            return Distance::Unknown;
        }
        let q = self.field().q();
        let Some(count) = projective_count(q, self.k() as u32) else {
            return Distance::Unknown;
        };
        if count > budget {
            return Distance::Unknown;
        }
        let mut best = self.n() + 1;
        self.enumerate_projective(|word| {
            let w = word.iter().filter(|x| !x.is_zero()).count();
            if w < best {
                best = w;
            }
            true
        });
        Distance::Exact(best)
    }

    /// Enumerates one representative per projective codeword (first nonzero
    /// message coordinate normalized to 1). The visitor returns false to
    /// stop early.
    fn enumerate_projective(&self, mut visit: impl FnMut(&[Felt]) -> bool) {
        let f = self.field().clone();
        let k = self.k();
        let n = self.n();
        let q = f.q();
        // messages with first nonzero coordinate = 1 at position `lead`
        for lead in 0..k {
            let free = k - lead - 1;
            let mut msg_tail = vec![Felt::ZERO; free];
            let mut word: Vec<Felt> = self.gen.row(lead).to_vec();
            loop {
                // word = row_lead + sum tail_i * row_(lead+1+i)
                if !visit(&word) {
                    return;
                }
                // odometer over the tail in field-element order
                let mut pos = 0;
                loop {
                    if pos == free {
                        break;
                    }
                    let row = self.gen.row(lead + 1 + pos);
                    let cur = msg_tail[pos];
                    let next_val = match cur.index() {
                        None => Some(f.elt(0)),
                        Some(i) if (i as u64) + 1 < q - 1 => Some(f.elt(i as u64 + 1)),
                        Some(_) => None,
                    };
                    match next_val {
                        Some(nv) => {
                            // word += (nv - cur) * row
                            let delta = f.sub(nv, cur);
                            for j in 0..n {
                                word[j] = f.add(word[j], f.mul(delta, row[j]));
                            }
                            msg_tail[pos] = nv;
                            break;
                        }
                        None => {
                            // reset this digit to zero, carry on
                            for j in 0..n {
                                word[j] = f.add(word[j], f.mul(f.neg(cur), row[j]));
                            }
                            msg_tail[pos] = Felt::ZERO;
                            pos += 1;
                        }
                    }
                }
                if pos == free {
                    break;
                }
            }
        }
    }

    /// MDS verification in the requested mode.
    pub fn is_mds(&self, mode: MdsMode, budget: u64, seed: u64) -> MdsVerdict {
        let n = self.n();
        let k = self.k();
        if k == 0 {
            return MdsVerdict::Unknown;
        }
        match mode {
            MdsMode::Exhaustive => {
                let target = n - k + 1;
                let q = self.field().q();
                match projective_count(q, k as u32) {
                    Some(c) if c <= budget => {}
                    _ => return MdsVerdict::Unknown,
                }
                let mut witness: Option<Vec<Felt>> = None;
                self.enumerate_projective(|word| {
                    let w = word.iter().filter(|x| !x.is_zero()).count();
                    if w < target {
                        witness = Some(word.to_vec());
                        false
                    } else {
                        true
                    }
                });
                match witness {
                    Some(w) => MdsVerdict::NotMds(MdsWitness::LowWeightWord(w)),
                    None => MdsVerdict::Mds,
                }
            }
            MdsMode::Determinant => {
                let Some(total) = binomial(n as u64, k as u64) else {
                    return MdsVerdict::Unknown;
                };
                if total > budget {
                    return MdsVerdict::Unknown;
                }
                let mut cols: Vec<usize> = (0..k).collect();
                loop {
                    let sub = self.gen.select_cols(&cols);
                    if sub.det().unwrap().is_zero() {
                        return MdsVerdict::NotMds(MdsWitness::SingularColumns(cols));
                    }
                    if !next_combination(&mut cols, n) {
                        break;
                    }
                }
                MdsVerdict::Mds
            }
            MdsMode::Sampled { trials } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..trials {
                    let cols = sample_subset(&mut rng, n, k);
                    let sub = self.gen.select_cols(&cols);
                    if sub.det().unwrap().is_zero() {
                        return MdsVerdict::NotMds(MdsWitness::SingularColumns(cols));
                    }
                }
                MdsVerdict::Probable { trials }
            }
        }
    }

    /// Strongest verification that fits the budgets: exhaustive, then
    /// determinant, then sampled.
    pub fn is_mds_auto(&self, enum_budget: u64, minor_budget: u64, seed: u64) -> MdsVerdict {
        match self.is_mds(MdsMode::Exhaustive, enum_budget, seed) {
            MdsVerdict::Unknown => {}
            v => return v,
        }
        match self.is_mds(MdsMode::Determinant, minor_budget, seed) {
            MdsVerdict::Unknown => {}
            v => return v,
        }
        self.is_mds(MdsMode::Sampled { trials: 1000 }, u64::MAX, seed)
    }

    /// Deletes the coordinates in `t`; the dimension may drop when |t| >= d,
    /// which is recorded in provenance rather than rejected.
    pub fn puncture(&self, t: &[usize]) -> Result<LinearCode, CodeError> {
        let t = check_coords(t, self.n())?;
        if t.len() == self.n() {
            return Err(CodeError::EmptyResult);
        }
        if t.is_empty() {
            return Ok(self.clone());
        }
        let m = self.gen.delete_cols(&t);
        let r = m.rref();
        if r.rank == 0 {
            return Err(CodeError::EmptyResult);
        }
        let prov = self.provenance.with_step(
            Step::PunctureRaw {
                t: t.clone(),
                dimension_preserved: r.rank == self.k(),
            },
            false,
        );
        Ok(LinearCode {
            gen: r.reduced.take_rows(0..r.rank),
            provenance: prov,
        })
    }

    /// Restricts to codewords vanishing on `t`, then deletes those columns.
    pub fn shorten(&self, t: &[usize]) -> Result<LinearCode, CodeError> {
        let t = check_coords(t, self.n())?;
        if t.is_empty() {
            return Ok(self.clone());
        }
        // messages y with y * G[:, t] = 0
        let sub = self.gen.select_cols(&t);
        let left = sub.transpose().nullspace();
        if left.rows() == 0 {
            return Err(CodeError::EmptyResult);
        }
        let rows = left.matmul(&self.gen)?;
        let m = rows.delete_cols(&t);
        let r = m.rref();
        if r.rank == 0 {
            return Err(CodeError::EmptyResult);
        }
        Ok(LinearCode {
            gen: r.reduced.take_rows(0..r.rank),
            provenance: self
                .provenance
                .with_step(Step::ShortenRaw { t: t.clone() }, false),
        })
    }
}

fn check_coords(t: &[usize], n: usize) -> Result<Vec<usize>, CodeError> {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if let Some(&bad) = t.iter().find(|&&c| c >= n) {
        return Err(CodeError::BadCoordinates(bad));
    }
    Ok(t)
}

/// (q^k - 1) / (q - 1), None on overflow.
fn projective_count(q: u64, k: u32) -> Option<u64> {
    let mut acc: u64 = 0;
    for _ in 0..k {
        acc = acc.checked_mul(q)?.checked_add(1)?;
    }
    Some(acc)
}

pub(crate) fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn next_combination(cols: &mut [usize], n: usize) -> bool {
    let k = cols.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if cols[i] < n - (k - i) {
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn sample_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    // Floyd's algorithm for a uniform k-subset of 0..n
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    for j in n - k..n {
        let t = rng.gen_range(0..=j);
        if chosen.contains(&t) {
            chosen.push(j);
        } else {
            chosen.push(t);
        }
    }
    chosen.sort_unstable();
    chosen
}
