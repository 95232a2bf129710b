//! Weight enumerators, Jacobi polynomials and the operators acting on them.
//!
//! A Jacobi polynomial with `ℓ` reference vectors records, for every
//! codeword `u`, how many coordinates `i` show each zero/nonzero pattern
//! `(φ(u_i), φ(w_{1,i}), …, φ(w_{ℓ,i}))`. Patterns are the variable indices
//! of [`crate::poly`]. The set form `J_{C,T}` is the case `ℓ = 1` with the
//! indicator vector of `T` as reference.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigRational, One};
use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::field::Symbol;
use crate::poly::{PolyError, SparsePoly, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JacobiError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("coordinate {index} outside 1..={n}")]
    CoordinateOutOfRange { index: usize, n: usize },
    #[error("reference vector {which} has length {got}, expected {expected}")]
    LengthMismatch { which: usize, expected: usize, got: usize },
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("total strength {t} must be smaller than the length {n}")]
    StrengthTooLarge { t: usize, n: usize },
    #[error("polarization produced non-integral coefficients; the code is not homogeneous enough for this strength")]
    NonIntegral,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// Reference vectors `w_1, …, w_ℓ` of a common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceSet {
    n: usize,
    vectors: Vec<Vec<Symbol>>,
}

impl ReferenceSet {
    pub fn new(n: usize, vectors: Vec<Vec<Symbol>>) -> Result<Self, JacobiError> {
        for (j, v) in vectors.iter().enumerate() {
            if v.len() != n {
                return Err(JacobiError::LengthMismatch { which: j + 1, expected: n, got: v.len() });
            }
        }
        Ok(ReferenceSet { n, vectors })
    }

    /// Indicator vectors of the given 1-based supports.
    pub fn from_supports(n: usize, supports: &[Vec<usize>]) -> Result<Self, JacobiError> {
        let mut vectors = Vec::with_capacity(supports.len());
        for s in supports {
            let mut v = vec![0; n];
            for &i in s {
                if !(1..=n).contains(&i) {
                    return Err(JacobiError::CoordinateOutOfRange { index: i, n });
                }
                v[i - 1] = 1;
            }
            vectors.push(v);
        }
        Ok(ReferenceSet { n, vectors })
    }

    pub fn ell(&self) -> usize {
        self.vectors.len()
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[Vec<Symbol>] {
        &self.vectors
    }

    /// 1-based supports of the reference vectors.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.vectors.iter().map(|v| v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i + 1).collect()).collect()
    }

    /// Per-coordinate reference pattern `Σ_j φ(w_{j,i}) 2^j`.
    fn patterns(&self) -> Vec<usize> {
        (0..self.n)
            .map(|i| self.vectors.iter().enumerate().map(|(j, v)| ((v[i] != 0) as usize) << (j + 1)).sum())
            .collect()
    }
}

/// `W_C(x, y) = Σ_u x^{n−wt(u)} y^{wt(u)}`.
pub fn weight_enumerator(code: &LinearCode) -> Result<SparsePoly, JacobiError> {
    let n = code.length() as u32;
    let dist = code.weight_distribution()?;
    Ok(SparsePoly::from_counts(
        0,
        dist.into_iter().enumerate().filter(|(_, a)| *a > 0).map(|(w, a)| (vec![n - w as u32, w as u32], a)),
    ))
}

/// `J_{C,T}` in the letters `w, z, x, y`; `T` holds 1-based coordinates.
pub fn jacobi_set(code: &LinearCode, t: &[usize]) -> Result<SparsePoly, JacobiError> {
    let t: BTreeSet<usize> = t.iter().copied().collect();
    let refs = ReferenceSet::from_supports(code.length(), &[t.into_iter().collect()])?;
    jacobi_multi(code, &refs)
}

/// `J_{C,w_1,…,w_ℓ} = Σ_u Π_a x_a^{N_a(u, w_1, …, w_ℓ)}`.
pub fn jacobi_multi(code: &LinearCode, refs: &ReferenceSet) -> Result<SparsePoly, JacobiError> {
    if refs.n != code.length() {
        return Err(JacobiError::LengthMismatch { which: 1, expected: code.length(), got: refs.n });
    }
    let ell = refs.ell();
    let patterns = refs.patterns();
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut exps = vec![0u32; 1 << (ell + 1)];
    code.for_each_codeword(|u| {
        exps.iter_mut().for_each(|e| *e = 0);
        for (&x, &r) in u.iter().zip(&patterns) {
            exps[r | (x != 0) as usize] += 1;
        }
        *tally.entry(exps.clone()).or_insert(0) += 1;
    })?;
    Ok(SparsePoly::from_counts(ell, tally))
}

/// The MacWilliams transform: sends `J_{C,w}` to `J_{C⊥,w}` given `q` and
/// `|C|`. Each pair of variables differing only in the first bit is mixed by
/// `x_{0b} ↦ x_{0b} + (q−1) x_{1b}`, `x_{1b} ↦ x_{0b} − x_{1b}`.
pub fn macwilliams_transform(j: &SparsePoly, q: u32, code_size: u128) -> SparsePoly {
    let ell = j.ell();
    let images: Vec<Option<SparsePoly>> = (0..j.arity())
        .map(|a| {
            let zero = SparsePoly::var(VarId::from_index(ell, a & !1));
            let one = SparsePoly::var(VarId::from_index(ell, a | 1));
            Some(if a & 1 == 0 {
                &zero + &one.scale(&BigRational::from_integer(BigInt::from(q - 1)))
            } else {
                &zero - &one
            })
        })
        .collect();
    let image = j.substitute(&images).expect("every variable has an image");
    image.scale(&BigRational::new(BigInt::one(), BigInt::from(code_size)))
}

/// The polarization operator `A_j = w_j ∂/∂x_0 + z_j ∂/∂x_1`. The result has
/// `max(ℓ, j)` reference slots.
pub fn polarize(p: &SparsePoly, j: usize) -> SparsePoly {
    assert!(j >= 1, "polarization index starts at 1");
    let ell = p.ell().max(j);
    let p = p.embed(ell);
    let dx = p.partial_derivative(VarId::x0(ell));
    let dy = p.partial_derivative(VarId::x1(ell));
    &(&SparsePoly::var(VarId::w(ell, j)) * &dx) + &(&SparsePoly::var(VarId::z(ell, j)) * &dy)
}

/// `(1 / n(n−1)⋯(n−t+1)) · A_ℓ^{t_ℓ} ⋯ A_1^{t_1} W` with `t = Σ t_j`.
///
/// For a code that holds the relevant generalized designs this equals the
/// Jacobi polynomial for reference vectors with disjoint supports of sizes
/// `t_1, …, t_ℓ`.
pub fn jacobi_via_polarization(w: &SparsePoly, t_vec: &[usize], n: usize) -> Result<SparsePoly, JacobiError> {
    if w.ell() != 0 {
        return Err(JacobiError::Infeasible("expected a weight enumerator in x and y".into()));
    }
    if !w.is_zero() && w.homogeneous_degree() != Some(n as u32) {
        return Err(JacobiError::NotHomogeneous(n));
    }
    let t: usize = t_vec.iter().sum();
    if t >= n {
        return Err(JacobiError::StrengthTooLarge { t, n });
    }
    let mut p = w.embed(t_vec.len());
    for (j, &tj) in t_vec.iter().enumerate() {
        for _ in 0..tj {
            p = polarize(&p, j + 1);
        }
    }
    let falling: BigInt = (0..t).map(|i| BigInt::from(n - i)).product();
    let p = p.scale(&BigRational::new(BigInt::one(), falling));
    if p.is_integral() {
        Ok(p)
    } else {
        Err(JacobiError::NonIntegral)
    }
}

/// Merge reference `j` into the codeword slot: `w_j ↦ x_0`, `z_j ↦ x_1`
/// and in general `x_a ↦ x_{a without bit j}`.
pub fn collapse(p: &SparsePoly, j: usize) -> SparsePoly {
    let ell = p.ell();
    assert!((1..=ell).contains(&j), "no reference slot {j}");
    let images: Vec<Option<SparsePoly>> = (0..p.arity())
        .map(|a| {
            let low = a & ((1 << j) - 1);
            let high = a >> (j + 1);
            Some(SparsePoly::var(VarId::from_index(ell - 1, low | high << j)))
        })
        .collect();
    p.substitute(&images).expect("every variable has an image")
}

/// One choice of reference vectors together with its Jacobi polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceChoice {
    /// 1-based supports, one per reference vector.
    pub supports: Vec<Vec<usize>>,
    pub polynomial: SparsePoly,
}

/// Outcome of [`invariance_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    /// The Jacobi polynomial of the first choice.
    pub first: ReferenceChoice,
    /// A choice whose polynomial differs from `first`, if any.
    pub witness: Option<ReferenceChoice>,
    /// Number of reference choices examined.
    pub choices: usize,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        self.witness.is_none()
    }
}

/// All `k`-subsets of `items`, in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            go(items, k, i + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}

/// Validate a partition `X_1, …, X_ℓ` of points in `1..=n` (parts must be
/// disjoint; they need not cover everything).
pub(crate) fn check_parts(parts: &[Vec<usize>], n: usize) -> Result<(), JacobiError> {
    let mut seen = vec![false; n + 1];
    for part in parts {
        for &i in part {
            if !(1..=n).contains(&i) {
                return Err(JacobiError::CoordinateOutOfRange { index: i, n });
            }
            if seen[i] {
                return Err(JacobiError::Infeasible(format!("coordinate {i} lies in two parts")));
            }
            seen[i] = true;
        }
    }
    Ok(())
}

/// Compute `J_{C,w_1,…,w_ℓ}` for every choice of reference vectors with
/// `supp(w_j) ⊆ X_j` and `wt(w_j) = t_j`, and report whether they coincide.
/// Reference values enter only through φ, so each support is tried once.
pub fn invariance_check(code: &LinearCode, parts: &[Vec<usize>], t_vec: &[usize]) -> Result<InvarianceReport, JacobiError> {
    let n = code.length();
    if parts.len() != t_vec.len() {
        return Err(JacobiError::Infeasible(format!("{} parts but {} strengths", parts.len(), t_vec.len())));
    }
    check_parts(parts, n)?;
    for (j, (part, &t)) in parts.iter().zip(t_vec).enumerate() {
        if t > part.len() {
            return Err(JacobiError::Infeasible(format!("t_{} = {t} exceeds |X_{}| = {}", j + 1, j + 1, part.len())));
        }
    }
    let per_part: Vec<Vec<Vec<usize>>> = parts.iter().zip(t_vec).map(|(p, &t)| subsets(p, t)).collect();
    let mut first: Option<ReferenceChoice> = None;
    let mut choices = 0;
    let mut index = vec![0usize; per_part.len()];
    loop {
        let supports: Vec<Vec<usize>> = index.iter().zip(&per_part).map(|(&i, opts)| opts[i].clone()).collect();
        let polynomial = jacobi_multi(code, &ReferenceSet::from_supports(n, &supports)?)?;
        choices += 1;
        match &first {
            None => first = Some(ReferenceChoice { supports, polynomial }),
            Some(f) if f.polynomial != polynomial => {
                return Ok(InvarianceReport {
                    first: f.clone(),
                    witness: Some(ReferenceChoice { supports, polynomial }),
                    choices,
                })
            }
            Some(_) => {}
        }
        // odometer over the per-part subset lists
        let mut k = index.len();
        loop {
            if k == 0 {
                return Ok(InvarianceReport { first: first.expect("at least one choice"), witness: None, choices });
            }
            k -= 1;
            index[k] += 1;
            if index[k] < per_part[k].len() {
                break;
            }
            index[k] = 0;
        }
    }
}

/// The distinct polynomials `J_{C,T}` over all `T` with `|T| = m`.
pub fn distinct_set_jacobis(code: &LinearCode, m: usize) -> Result<Vec<SparsePoly>, JacobiError> {
    let points: Vec<usize> = (1..=code.length()).collect();
    let mut out: Vec<SparsePoly> = Vec::new();
    for t in subsets(&points, m) {
        let j = jacobi_set(code, &t)?;
        if !out.contains(&j) {
            out.push(j);
        }
    }
    Ok(out)
}
