//! Block families from fixed-weight codewords, λ-spectra over `t`-subsets,
//! packing/covering style reports, and generalized `t`-designs on a
//! partitioned point set.
//!
//! Points are `1..=v` and blocks are stored as bit masks, so `v ≤ 64`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::field::Symbol;
use crate::jacobi::{check_parts, subsets, JacobiError};

/// Largest number of points a block family may have.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("{0} points exceed the supported maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("block {0:?} is not a {1}-subset of the points")]
    BadBlock(Vec<usize>, usize),
    #[error("no blocks")]
    Empty,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

impl From<JacobiError> for DesignError {
    fn from(e: JacobiError) -> Self {
        match e {
            JacobiError::Code(c) => DesignError::Code(c),
            other => DesignError::Infeasible(other.to_string()),
        }
    }
}

/// Whether repeated supports are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockMode {
    /// One block per codeword.
    Multiset,
    /// One block per distinct support.
    SupportSet,
}

impl fmt::Display for BlockMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockMode::Multiset => "multiset",
            BlockMode::SupportSet => "support-set",
        })
    }
}

impl FromStr for BlockMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "multiset" => Ok(BlockMode::Multiset),
            "support-set" | "support" | "set" => Ok(BlockMode::SupportSet),
            other => Err(format!("unknown block mode `{other}` (expected multiset or support-set)")),
        }
    }
}

fn mask_of(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

fn points_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn support_mask(u: &[Symbol]) -> u64 {
    u.iter().enumerate().filter(|(_, &x)| x != 0).fold(0, |m, (i, _)| m | 1 << i)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A collection of `k`-subsets of `{1, …, v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFamily {
    v: usize,
    k: usize,
    mode: BlockMode,
    blocks: Vec<u64>,
}

impl BlockFamily {
    /// Build from explicit 1-based blocks. In support-set mode duplicates are
    /// removed.
    pub fn new(v: usize, k: usize, blocks: Vec<Vec<usize>>, mode: BlockMode) -> Result<Self, DesignError> {
        if v > MAX_POINTS {
            return Err(DesignError::TooManyPoints(v));
        }
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mask = mask_of(&b);
            if b.iter().any(|&i| !(1..=v).contains(&i)) || mask.count_ones() as usize != k || b.len() != k {
                return Err(DesignError::BadBlock(b, k));
            }
            masks.push(mask);
        }
        Ok(Self::from_masks(v, k, masks, mode))
    }

    fn from_masks(v: usize, k: usize, mut blocks: Vec<u64>, mode: BlockMode) -> Self {
        blocks.sort_unstable();
        if mode == BlockMode::SupportSet {
            blocks.dedup();
        }
        BlockFamily { v, k, mode, blocks }
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> BlockMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks as sorted 1-based point lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&m| points_of(m)).collect()
    }
}

/// Supports of the weight-`k` codewords of `code`.
pub fn blocks_from_code(code: &LinearCode, k: usize, mode: BlockMode) -> Result<BlockFamily, DesignError> {
    let n = code.length();
    if n > MAX_POINTS {
        return Err(DesignError::TooManyPoints(n));
    }
    if k == 0 || k > n {
        return Err(DesignError::Infeasible(format!("block size {k} outside 1..={n}")));
    }
    let mut masks = Vec::new();
    code.for_each_codeword(|u| {
        let m = support_mask(u);
        if m.count_ones() as usize == k {
            masks.push(m);
        }
    })?;
    Ok(BlockFamily::from_masks(n, k, masks, mode))
}

/// How many `t`-subsets lie in exactly `λ` blocks, for each `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignSpectrum {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    /// `λ ↦ a_λ`.
    pub histogram: BTreeMap<u64, u128>,
    pub block_count: usize,
}

impl DesignSpectrum {
    /// `Some(λ)` when every `t`-subset lies in the same number of blocks.
    pub fn constant_lambda(&self) -> Option<u64> {
        match self.histogram.len() {
            1 => self.histogram.keys().next().copied(),
            _ => None,
        }
    }

    pub fn lambda_max(&self) -> u64 {
        *self.histogram.keys().next_back().expect("a spectrum is never empty")
    }

    pub fn lambda_min(&self) -> u64 {
        *self.histogram.keys().next().expect("a spectrum is never empty")
    }

    /// `t-(v,k,(λ_1^{a_1},…,λ_N^{a_N}))` with `λ` ascending, or the classical
    /// `t-(v,k,λ)` when the spectrum is constant.
    pub fn parameters(&self) -> String {
        let lambdas = match self.constant_lambda() {
            Some(l) => l.to_string(),
            None => {
                let groups: Vec<String> = self.histogram.iter().map(|(l, a)| format!("{l}^{{{a}}}")).collect();
                format!("({})", groups.join(","))
            }
        };
        format!("{}-({},{},{})", self.t, self.v, self.k, lambdas)
    }

    /// `D_{λmax}(v,k,t) ≤ B ≤ C_{λmin}(v,k,t)`.
    pub fn statement(&self) -> String {
        let (v, k, t) = (self.v, self.k, self.t);
        format!(
            "D_{}({v},{k},{t}) ≤ {} ≤ C_{}({v},{k},{t})",
            self.lambda_max(),
            self.block_count,
            self.lambda_min()
        )
    }
}

/// Count the blocks through every `t`-subset of the points.
pub fn t_spectrum(family: &BlockFamily, t: usize) -> Result<DesignSpectrum, DesignError> {
    if t > family.k {
        return Err(DesignError::Infeasible(format!("t = {t} exceeds the block size {}", family.k)));
    }
    let mut counts: HashMap<u64, u64> = HashMap::new();
    for &b in &family.blocks {
        for sub in subsets(&points_of(b), t) {
            *counts.entry(mask_of(&sub)).or_insert(0) += 1;
        }
    }
    let mut histogram: BTreeMap<u64, u128> = BTreeMap::new();
    for &c in counts.values() {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let untouched = binomial(family.v, t) - counts.len() as u128;
    if untouched > 0 {
        histogram.insert(0, untouched);
    }
    Ok(DesignSpectrum { v: family.v, k: family.k, t, histogram, block_count: family.blocks.len() })
}

/// One `(λ, a_λ)` pair of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub lambda: u64,
    pub count: u128,
}

/// Machine-readable design summary; [`fmt::Display`] gives the one-line text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub spectrum: Vec<SpectrumEntry>,
    pub blocks: usize,
    pub design: bool,
    pub parameters: String,
    pub statement: String,
}

impl fmt::Display for DesignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.parameters, self.statement)?;
        if self.design {
            write!(f, " ; {}-design with λ={}", self.t, self.spectrum[0].lambda)?;
        }
        Ok(())
    }
}

pub fn design_report(family: &BlockFamily, t: usize) -> Result<DesignReport, DesignError> {
    if family.is_empty() {
        return Err(DesignError::Empty);
    }
    let s = t_spectrum(family, t)?;
    Ok(DesignReport {
        v: s.v,
        k: s.k,
        t,
        spectrum: s.histogram.iter().map(|(&lambda, &count)| SpectrumEntry { lambda, count }).collect(),
        blocks: s.block_count,
        design: s.constant_lambda().is_some(),
        parameters: s.parameters(),
        statement: s.statement(),
    })
}

/// Two `t`-choices contained in different numbers of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountWitness {
    pub first: Vec<Vec<usize>>,
    pub first_count: u64,
    pub second: Vec<Vec<usize>>,
    pub second_count: u64,
}

/// Result of [`generalized_design_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedDesign {
    /// Codewords in the weight class (blocks, with multiplicity).
    pub members: usize,
    pub lambda: Option<u64>,
    pub witness: Option<CountWitness>,
}

fn validate_partition(code: &LinearCode, parts: &[Vec<usize>]) -> Result<(), DesignError> {
    let n = code.length();
    if n > MAX_POINTS {
        return Err(DesignError::TooManyPoints(n));
    }
    check_parts(parts, n)?;
    let covered: usize = parts.iter().map(Vec::len).sum();
    if covered != n {
        return Err(DesignError::Infeasible(format!("the parts cover {covered} of {n} coordinates")));
    }
    Ok(())
}

/// Per-part support masks of every codeword, grouped by `k`-vector.
fn classes(code: &LinearCode, parts: &[Vec<usize>]) -> Result<BTreeMap<Vec<usize>, Vec<u64>>, DesignError> {
    let part_masks: Vec<u64> = parts.iter().map(|p| mask_of(p)).collect();
    let mut out: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    code.for_each_codeword(|u| {
        let m = support_mask(u);
        let k: Vec<usize> = part_masks.iter().map(|&p| (m & p).count_ones() as usize).collect();
        out.entry(k).or_default().push(m);
    })?;
    Ok(out)
}

fn check_class(members: &[u64], parts: &[Vec<usize>], t_vec: &[usize]) -> GeneralizedDesign {
    let per_part: Vec<Vec<Vec<usize>>> = parts.iter().zip(t_vec).map(|(p, &t)| subsets(p, t)).collect();
    let mut first: Option<(Vec<Vec<usize>>, u64)> = None;
    let mut index = vec![0usize; per_part.len()];
    loop {
        let choice: Vec<Vec<usize>> = index.iter().zip(&per_part).map(|(&i, opts)| opts[i].clone()).collect();
        let mask = choice.iter().fold(0, |m, c| m | mask_of(c));
        let count = members.iter().filter(|&&b| b & mask == mask).count() as u64;
        match &first {
            None => first = Some((choice, count)),
            Some((f, c)) if *c != count => {
                return GeneralizedDesign {
                    members: members.len(),
                    lambda: None,
                    witness: Some(CountWitness { first: f.clone(), first_count: *c, second: choice, second_count: count }),
                }
            }
            Some(_) => {}
        }
        let mut k = index.len();
        loop {
            if k == 0 {
                return GeneralizedDesign { members: members.len(), lambda: first.map(|f| f.1), witness: None };
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

fn check_vectors(parts: &[Vec<usize>], k_vec: &[usize], t_vec: &[usize]) -> Result<(), DesignError> {
    if k_vec.len() != parts.len() || t_vec.len() != parts.len() {
        return Err(DesignError::Infeasible(format!(
            "{} parts, {} block sizes, {} strengths",
            parts.len(),
            k_vec.len(),
            t_vec.len()
        )));
    }
    for (i, ((p, &k), &t)) in parts.iter().zip(k_vec).zip(t_vec).enumerate() {
        if t > k || k > p.len() {
            return Err(DesignError::Infeasible(format!("part {}: need t ≤ k ≤ |X| but have {t}, {k}, {}", i + 1, p.len())));
        }
    }
    Ok(())
}

/// Whether the codewords with `|supp(u) ∩ X_i| = k_i` form a generalized
/// `t`-design: every choice of `t_i`-subsets `T_i ⊆ X_i` is covered by the
/// same number λ of them. Codewords count with multiplicity; an empty class
/// gives λ = 0.
pub fn generalized_design_check(
    code: &LinearCode,
    parts: &[Vec<usize>],
    k_vec: &[usize],
    t_vec: &[usize],
) -> Result<GeneralizedDesign, DesignError> {
    validate_partition(code, parts)?;
    check_vectors(parts, k_vec, t_vec)?;
    let classes = classes(code, parts)?;
    let members = classes.get(k_vec).map(Vec::as_slice).unwrap_or(&[]);
    Ok(check_class(members, parts, t_vec))
}

/// Like [`generalized_design_check`], but the blocks are all codewords of
/// total weight `k`, split into per-part supports, whatever their per-part
/// weights. This is the family whose design property is equivalent to the
/// invariance of the multi-reference Jacobi polynomial.
pub fn weight_design_check(
    code: &LinearCode,
    parts: &[Vec<usize>],
    k: usize,
    t_vec: &[usize],
) -> Result<GeneralizedDesign, DesignError> {
    validate_partition(code, parts)?;
    if t_vec.len() != parts.len() {
        return Err(DesignError::Infeasible(format!("{} parts but {} strengths", parts.len(), t_vec.len())));
    }
    if let Some((i, _)) = parts.iter().zip(t_vec).enumerate().find(|(_, (p, &t))| t > p.len()) {
        return Err(DesignError::Infeasible(format!("t_{} exceeds the size of its part", i + 1)));
    }
    let members: Vec<u64> = classes(code, parts)?
        .into_iter()
        .filter(|(k_vec, _)| k_vec.iter().sum::<usize>() == k)
        .flat_map(|(_, m)| m)
        .collect();
    Ok(check_class(&members, parts, t_vec))
}

/// First failure found by [`is_generalized_t_homogeneous`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityFailure {
    pub k_vec: Vec<usize>,
    pub t_vec: Vec<usize>,
    pub witness: CountWitness,
}

/// Result of [`is_generalized_t_homogeneous`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneity {
    /// Number of `(k_vec, t_vec)` pairs examined.
    pub checked: usize,
    pub failure: Option<HomogeneityFailure>,
}

impl Homogeneity {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// All compositions of `t` into `bounds.len()` parts with part `i` at most
/// `bounds[i]`.
fn compositions(t: usize, bounds: &[usize]) -> Vec<Vec<usize>> {
    if bounds.is_empty() {
        return if t == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=t.min(bounds[0]) {
        for mut rest in compositions(t - first, &bounds[1..]) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Check every nonempty weight class against every `t_vec` summing to `t`.
pub fn is_generalized_t_homogeneous(code: &LinearCode, parts: &[Vec<usize>], t: usize) -> Result<Homogeneity, DesignError> {
    validate_partition(code, parts)?;
    let classes = classes(code, parts)?;
    let mut checked = 0;
    for (k_vec, members) in &classes {
        let bounds: Vec<usize> = k_vec.iter().zip(parts).map(|(&k, p)| k.min(p.len())).collect();
        for t_vec in compositions(t, &bounds) {
            checked += 1;
            let r = check_class(members, parts, &t_vec);
            if let Some(witness) = r.witness {
                return Ok(Homogeneity {
                    checked,
                    failure: Some(HomogeneityFailure { k_vec: k_vec.clone(), t_vec, witness }),
                });
            }
        }
    }
    Ok(Homogeneity { checked, failure: None })
}

/// Parse a parameter string such as `2-(8,3,(2^{12},0^{16}))`,
/// `2-(4,2,0^{4},1^{2})` or `5-(12,6,1)` into `(t, v, k, {λ: a_λ})`. A bare
/// λ is recorded with count 0, meaning "all t-subsets".
pub fn parse_parameters(text: &str) -> Option<(usize, usize, usize, BTreeMap<u64, u128>)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (t, rest) = compact.split_once("-(")?;
    let rest = rest.strip_suffix(')')?;
    let mut fields = rest.splitn(3, ',');
    let v = fields.next()?.parse().ok()?;
    let k = fields.next()?.parse().ok()?;
    let lambdas = fields.next()?;
    let lambdas = lambdas.strip_prefix('(').and_then(|l| l.strip_suffix(')')).unwrap_or(lambdas);
    let mut hist = BTreeMap::new();
    for group in lambdas.split(',') {
        match group.split_once('^') {
            Some((l, a)) => {
                let a = a.trim_start_matches('{').trim_end_matches('}');
                *hist.entry(l.parse().ok()?).or_insert(0) += a.parse::<u128>().ok()?;
            }
            None => {
                hist.insert(group.parse().ok()?, 0);
            }
        }
    }
    Some((t.parse().ok()?, v, k, hist))
}
