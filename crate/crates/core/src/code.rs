//! Linear codes over `F_q`: row reduction, duals, exhaustive enumeration,
//! puncturing, type classification, a small catalog and a text file format.
//!
//! Codewords are vectors of field [`Symbol`]s. Enumeration walks the message
//! space in lexicographic order, updating the running codeword by a single
//! row difference per step.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldError, FieldSpec, InnerProduct, Symbol};
use crate::poly::SparsePoly;

/// Default cap on the number of codewords a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
    #[error("symbol {symbol} is not an element of F_{q}")]
    BadSymbol { symbol: u32, q: u32 },
    #[error("enumerating {words} codewords exceeds the budget of {budget}")]
    BudgetExceeded { words: String, budget: u64 },
    #[error("coordinate {index} outside 1..={n}")]
    CoordinateOutOfRange { index: usize, n: usize },
    #[error("unknown catalog code `{0}`")]
    UnknownCode(String),
    #[error("codes live over different fields or use different inner products")]
    Incompatible,
    #[error("Hermitian inner product needs a field of square order, got q = {0}")]
    NoConjugation(u32),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// Classical families of self-dual codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum CodeType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::I => "I",
            CodeType::II => "II",
            CodeType::III => "III",
            CodeType::IV => "IV",
        })
    }
}

/// A linear code given by a generator matrix in reduced row echelon form.
#[derive(Clone)]
pub struct LinearCode {
    field: Arc<FieldSpec>,
    n: usize,
    rows: Vec<Vec<Symbol>>,
    ip: InnerProduct,
    dropped: usize,
    budget: u64,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}] over F_{} ({})", self.n, self.dimension(), self.field.order(), self.ip)
    }
}

/// Equality of the underlying subspaces (the echelon form is canonical).
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.ip == other.ip && self.rows == other.rows
    }
}

impl Eq for LinearCode {}

/// Reduced row echelon form; returns the nonzero rows.
fn rref(field: &FieldSpec, mut rows: Vec<Vec<Symbol>>, n: usize) -> Vec<Vec<Symbol>> {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

impl LinearCode {
    /// Row-reduce the given generators. Linearly dependent rows are dropped
    /// and counted (see [`LinearCode::dropped_rows`]).
    pub fn from_generator_matrix(
        field: Arc<FieldSpec>,
        n: usize,
        rows: Vec<Vec<Symbol>>,
        ip: InnerProduct,
    ) -> Result<Self, CodeError> {
        if ip == InnerProduct::Hermitian && !field.has_conjugation() {
            return Err(CodeError::NoConjugation(field.order()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CodeError::Ragged { row: i + 1, expected: n, got: row.len() });
            }
            if let Some(&s) = row.iter().find(|&&s| s as u32 >= field.order()) {
                return Err(CodeError::BadSymbol { symbol: s as u32, q: field.order() });
            }
        }
        let given = rows.len();
        let rows = rref(&field, rows, n);
        Ok(LinearCode { dropped: given - rows.len(), field, n, rows, ip, budget: DEFAULT_BUDGET })
    }

    /// Replace the enumeration budget.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn inner_product(&self) -> InnerProduct {
        self.ip
    }

    /// Generator rows in reduced row echelon form.
    pub fn generators(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    /// How many input rows were linearly dependent on the others.
    pub fn dropped_rows(&self) -> usize {
        self.dropped
    }

    /// `q^k`, or `None` when it overflows.
    pub fn size(&self) -> Option<u128> {
        (self.field.order() as u128).checked_pow(self.rows.len() as u32)
    }

    fn check_budget(&self) -> Result<(), CodeError> {
        match self.size() {
            Some(s) if s <= self.budget as u128 => Ok(()),
            other => Err(CodeError::BudgetExceeded {
                words: other.map_or_else(|| format!("{}^{}", self.field.order(), self.rows.len()), |s| s.to_string()),
                budget: self.budget,
            }),
        }
    }

    /// The dual code under this code's inner product.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let basis = match self.ip {
            InnerProduct::Euclidean => self.rows.clone(),
            InnerProduct::Hermitian => rref(f, self.rows.iter().map(|r| r.iter().map(|&x| f.conj(x)).collect()).collect(), self.n),
        };
        let pivots: Vec<usize> = basis.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
        let mut null = Vec::new();
        for free in (0..self.n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.n];
            v[free] = 1;
            for (row, &p) in basis.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            null.push(v);
        }
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            rows: rref(f, null, self.n),
            ip: self.ip,
            dropped: 0,
            budget: self.budget,
        }
    }

    /// Whether `u` is orthogonal to every generator.
    pub fn is_orthogonal_to(&self, u: &[Symbol]) -> bool {
        self.rows.iter().all(|r| self.field.inner_product(u, r, self.ip).expect("validated lengths") == 0)
    }

    pub fn contains(&self, u: &[Symbol]) -> bool {
        if u.len() != self.n {
            return false;
        }
        let mut rows = self.rows.clone();
        rows.push(u.to_vec());
        rref(&self.field, rows, self.n).len() == self.rows.len()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.rows.len() == self.n && self.rows.iter().all(|r| self.is_orthogonal_to(r))
    }

    /// All codewords, in lexicographic message order.
    pub fn codewords(&self) -> Result<CodewordIter, CodeError> {
        self.check_budget()?;
        Ok(CodewordIter::new(self))
    }

    /// Visit every codeword without allocating per word.
    pub fn for_each_codeword(&self, mut visit: impl FnMut(&[Symbol])) -> Result<(), CodeError> {
        let mut it = self.codewords()?;
        while let Some(word) = it.advance() {
            visit(word);
        }
        Ok(())
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>, CodeError> {
        let mut dist = vec![0u64; self.n + 1];
        self.for_each_codeword(|u| dist[weight(u)] += 1)?;
        Ok(dist)
    }

    /// Smallest nonzero weight, `None` for the zero code.
    pub fn minimum_distance(&self) -> Result<Option<usize>, CodeError> {
        Ok(self.weight_distribution()?.iter().enumerate().skip(1).find(|(_, &a)| a > 0).map(|(w, _)| w))
    }

    /// Delete coordinate `i` (1-based).
    pub fn puncture(&self, i: usize) -> Result<LinearCode, CodeError> {
        self.check_coordinate(i)?;
        let rows = self.rows.iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != i - 1).map(|(_, &x)| x).collect()).collect();
        Ok(LinearCode::from_generator_matrix(self.field.clone(), self.n - 1, rows, self.ip)?.with_budget(self.budget))
    }

    fn check_coordinate(&self, i: usize) -> Result<(), CodeError> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(CodeError::CoordinateOutOfRange { index: i, n: self.n })
        }
    }

    /// `Σ_{u∈C} x^{n−1−wt(u')} y^{wt(u')}` where `u'` is `u` without
    /// coordinate `i`; every codeword contributes, so words that collide
    /// after deletion are counted with multiplicity.
    pub fn punctured_enumerator_multiset(&self, i: usize) -> Result<SparsePoly, CodeError> {
        self.check_coordinate(i)?;
        let mut dist = vec![0u64; self.n];
        self.for_each_codeword(|u| {
            let w = weight(u) - (u[i - 1] != 0) as usize;
            dist[w] += 1;
        })?;
        let m = self.n as u32 - 1;
        Ok(SparsePoly::from_counts(
            0,
            dist.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(w, c)| (vec![m - w as u32, w as u32], c)),
        ))
    }

    /// Type I–IV classification of a self-dual code.
    pub fn type_check(&self) -> Result<Option<CodeType>, CodeError> {
        if !self.is_self_dual() {
            return Ok(None);
        }
        let dist = self.weight_distribution()?;
        let weights_divisible = |d: usize| dist.iter().enumerate().all(|(w, &a)| a == 0 || w % d == 0);
        let q = self.field.order();
        Ok(match (q, self.ip) {
            (2, InnerProduct::Euclidean) if self.n.is_multiple_of(8) && weights_divisible(4) => Some(CodeType::II),
            (2, InnerProduct::Euclidean) => Some(CodeType::I),
            (3, InnerProduct::Euclidean) if self.n.is_multiple_of(4) && weights_divisible(3) => Some(CodeType::III),
            (4, InnerProduct::Hermitian) if weights_divisible(2) => Some(CodeType::IV),
            _ => None,
        })
    }

    /// `C ⊕ D`, coordinates of `other` placed after those of `self`.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode, CodeError> {
        if self.field != other.field || self.ip != other.ip {
            return Err(CodeError::Incompatible);
        }
        let n = self.n + other.n;
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        for r in &self.rows {
            let mut v = r.clone();
            v.resize(n, 0);
            rows.push(v);
        }
        for r in &other.rows {
            let mut v = vec![0; self.n];
            v.extend_from_slice(r);
            rows.push(v);
        }
        Ok(LinearCode::from_generator_matrix(self.field.clone(), n, rows, self.ip)?.with_budget(self.budget.min(other.budget)))
    }

    /// `C ⊕ … ⊕ C` with `m ≥ 1` summands.
    pub fn power(&self, m: usize) -> Result<LinearCode, CodeError> {
        assert!(m >= 1, "a direct power needs at least one summand");
        let mut out = self.clone();
        for _ in 1..m {
            out = out.direct_sum(self)?;
        }
        Ok(out)
    }

    // ----- catalog -----

    /// Look up a pinned code. Names combine with `^m` (direct power) and `+`
    /// (direct sum), e.g. `tetracode^2` or `i2+hexacode`.
    pub fn catalog(name: &str) -> Result<LinearCode, CodeError> {
        let unknown = || CodeError::UnknownCode(name.to_string());
        let mut acc: Option<LinearCode> = None;
        for part in name.split('+').map(str::trim) {
            let (base, m) = match part.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim().parse::<usize>().ok().filter(|&m| m >= 1).ok_or_else(unknown)?),
                None => (part, 1),
            };
            let code = base_code(base).ok_or_else(unknown)??.power(m)?;
            acc = Some(match acc {
                None => code,
                Some(a) => a.direct_sum(&code)?,
            });
        }
        acc.ok_or_else(unknown)
    }

    /// Names accepted by [`LinearCode::catalog`] before composition.
    pub fn catalog_names() -> &'static [&'static str] {
        &["tetracode", "golay12", "i2", "hexacode", "ternary16", "ternary20"]
    }

    // ----- file format -----

    /// Parse the generator-matrix text format:
    ///
    /// ```text
    /// # comment
    /// q=3^1 n=4 ip=euclidean
    /// 1 0 1 1
    /// 0 1 1 2
    /// ```
    ///
    /// Extension-field symbols are dotted basis coefficients such as `0.1`.
    /// An optional `modulus=c0,…,cf` in the header overrides the default
    /// field polynomial.
    pub fn parse(text: &str) -> Result<LinearCode, CodeError> {
        let err = |line: usize, message: String| CodeError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header line".into()))?;
        let mut q = None;
        let mut n = None;
        let mut ip = InnerProduct::Euclidean;
        let mut modulus = None;
        for tok in header.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| err(hline, format!("expected key=value, found `{tok}`")))?;
            match k {
                "q" => q = Some(v.to_string()),
                "n" => n = Some(v.parse::<usize>().map_err(|_| err(hline, format!("bad length `{v}`")))?),
                "ip" => ip = v.parse().map_err(|_| err(hline, format!("bad inner product `{v}`")))?,
                "modulus" => modulus = Some(v.to_string()),
                _ => return Err(err(hline, format!("unknown header key `{k}`"))),
            }
        }
        let q = q.ok_or_else(|| err(hline, "header lacks q=".into()))?;
        let n = n.ok_or_else(|| err(hline, "header lacks n=".into()))?;
        let spec_text = match modulus {
            Some(m) => format!("q={q};modulus={m}"),
            None => format!("q={q}"),
        };
        let field = FieldSpec::parse(&spec_text).map_err(|e| err(hline, e.to_string()))?;
        let mut rows = Vec::new();
        for (ln, line) in lines {
            let row: Vec<Symbol> = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| field.parse_symbol(s).map_err(|e| err(ln, e.to_string())))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(err(ln, format!("row has {} symbols, expected {n}", row.len())));
            }
            rows.push(row);
        }
        LinearCode::from_generator_matrix(field, n, rows, ip).map_err(|e| err(hline, e.to_string()))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<LinearCode, CodeError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| CodeError::Io { path: path.display().to_string(), message: e.to_string() })?;
        LinearCode::parse(&text).map_err(|e| CodeError::Io { path: path.display().to_string(), message: e.to_string() })
    }

    /// Serialize in the format read by [`LinearCode::parse`].
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
        let mut out = format!("q={}^{} n={} ip={}", f.characteristic(), f.degree(), self.n, self.ip);
        if f.degree() > 1 {
            out.push_str(&format!(" modulus={}", modulus.join(",")));
        }
        out.push('\n');
        for r in &self.rows {
            let syms: Vec<String> = r.iter().map(|&s| f.format_symbol(s)).collect();
            out.push_str(&syms.join(" "));
            out.push('\n');
        }
        out
    }
}

fn base_code(name: &str) -> Option<Result<LinearCode, CodeError>> {
    let build = |q: u32, n: usize, rows: Vec<Vec<Symbol>>, ip: InnerProduct| {
        FieldSpec::of_order(q).map_err(CodeError::from).and_then(|f| LinearCode::from_generator_matrix(f, n, rows, ip))
    };
    Some(match name {
        "tetracode" => build(3, 4, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]], InnerProduct::Euclidean),
        "golay12" => {
            let a = ["011111", "101221", "110122", "121012", "122101", "112210"];
            let rows = a
                .iter()
                .enumerate()
                .map(|(i, tail)| {
                    let mut r = vec![0; 6];
                    r[i] = 1;
                    r.extend(tail.bytes().map(|b| b - b'0'));
                    r
                })
                .collect();
            build(3, 12, rows, InnerProduct::Euclidean)
        }
        "i2" => build(4, 2, vec![vec![1, 1]], InnerProduct::Hermitian),
        "hexacode" => {
            // ω is symbol 2 under the default F_4 modulus x^2+x+1
            let w = 2;
            build(
                4,
                6,
                vec![vec![1, 0, 0, 1, w, w], vec![0, 1, 0, w, 1, w], vec![0, 0, 1, w, w, 1]],
                InnerProduct::Hermitian,
            )
        }
        "ternary16" => LinearCode::parse(include_str!("../codes/ternary16.gen")),
        "ternary20" => LinearCode::parse(include_str!("../codes/ternary20.gen")),
        _ => return None,
    })
}

/// Hamming weight.
pub fn weight(u: &[Symbol]) -> usize {
    u.iter().filter(|&&x| x != 0).count()
}

/// Odometer over message vectors; see [`LinearCode::codewords`].
pub struct CodewordIter {
    field: Arc<FieldSpec>,
    /// `multiples[i][s]` is `s · row_i`.
    multiples: Vec<Vec<Vec<Symbol>>>,
    digits: Vec<Symbol>,
    word: Vec<Symbol>,
    started: bool,
    done: bool,
}

impl CodewordIter {
    fn new(code: &LinearCode) -> Self {
        let f = &code.field;
        let q = f.order();
        let multiples = code
            .rows
            .iter()
            .map(|r| (0..q).map(|s| r.iter().map(|&x| f.mul(s as Symbol, x)).collect()).collect())
            .collect();
        CodewordIter {
            field: f.clone(),
            multiples,
            digits: vec![0; code.rows.len()],
            word: vec![0; code.n],
            started: false,
            done: false,
        }
    }

    /// The current message vector (valid after the first call to `next`).
    pub fn message(&self) -> &[Symbol] {
        &self.digits
    }

    fn shift(&mut self, row: usize, from: Symbol, to: Symbol) {
        let f = &self.field;
        let (a, b) = (&self.multiples[row][from as usize], &self.multiples[row][to as usize]);
        for ((w, &x), &y) in self.word.iter_mut().zip(a).zip(b) {
            *w = f.add(f.sub(*w, x), y);
        }
    }

    fn advance(&mut self) -> Option<&[Symbol]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.word);
        }
        let q = self.field.order() as Symbol;
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            let d = self.digits[i];
            if d + 1 < q {
                self.shift(i, d, d + 1);
                self.digits[i] = d + 1;
                return Some(&self.word);
            }
            self.shift(i, d, 0);
            self.digits[i] = 0;
        }
    }
}

impl Iterator for CodewordIter {
    type Item = Vec<Symbol>;

    fn next(&mut self) -> Option<Vec<Symbol>> {
        self.advance().map(<[Symbol]>::to_vec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f(q: u32) -> Arc<FieldSpec> {
        FieldSpec::of_order(q).unwrap()
    }

    #[test]
    fn construction_and_rank() {
        let t = LinearCode::catalog("tetracode").unwrap();
        assert_eq!((t.length(), t.dimension()), (4, 2));
        let z = LinearCode::from_generator_matrix(f(3), 4, vec![vec![0; 4]], InnerProduct::Euclidean).unwrap();
        assert_eq!(z.dimension(), 0);
        assert_eq!(z.dropped_rows(), 1);
        let i2 = LinearCode::catalog("i2").unwrap();
        assert_eq!((i2.length(), i2.dimension()), (2, 1));
        assert!(matches!(
            LinearCode::from_generator_matrix(f(3), 3, vec![vec![1, 2]], InnerProduct::Euclidean),
            Err(CodeError::Ragged { row: 1, expected: 3, got: 2 })
        ));
        assert!(matches!(
            LinearCode::from_generator_matrix(f(3), 2, vec![vec![1, 3]], InnerProduct::Euclidean),
            Err(CodeError::BadSymbol { .. })
        ));
        assert!(matches!(
            LinearCode::from_generator_matrix(f(3), 2, vec![vec![1, 1]], InnerProduct::Hermitian),
            Err(CodeError::NoConjugation(3))
        ));
    }

    #[test]
    fn duals() {
        for name in ["tetracode", "golay12", "i2", "hexacode", "i2^3", "tetracode^2"] {
            let c = LinearCode::catalog(name).unwrap();
            assert_eq!(c.dual(), c, "{name} should be self-dual");
            assert!(c.is_self_dual());
        }
        let rep2 = LinearCode::from_generator_matrix(f(2), 2, vec![vec![1, 1]], InnerProduct::Euclidean).unwrap();
        assert_eq!(rep2.dual(), rep2);
        let rep3 = LinearCode::from_generator_matrix(f(2), 3, vec![vec![1, 1, 1]], InnerProduct::Euclidean).unwrap();
        let d = rep3.dual();
        assert_eq!(d.dimension(), 2);
        assert_eq!(d.dual(), rep3);
        d.for_each_codeword(|u| assert!(rep3.is_orthogonal_to(u))).unwrap();
    }

    #[test]
    fn enumeration() {
        let t = LinearCode::catalog("tetracode").unwrap();
        let words: Vec<_> = t.codewords().unwrap().collect();
        assert_eq!(words.len(), 9);
        assert_eq!(words.iter().collect::<HashSet<_>>().len(), 9);
        assert_eq!(t.weight_distribution().unwrap(), vec![1, 0, 0, 8, 0]);

        let g = LinearCode::catalog("golay12").unwrap();
        let dist = g.weight_distribution().unwrap();
        let nonzero: Vec<(usize, u64)> = dist.iter().enumerate().filter(|(_, &a)| a > 0).map(|(w, &a)| (w, a)).collect();
        assert_eq!(nonzero, vec![(0, 1), (6, 264), (9, 440), (12, 24)]);

        let z = LinearCode::from_generator_matrix(f(4), 3, vec![], InnerProduct::Euclidean).unwrap();
        assert_eq!(z.codewords().unwrap().collect::<Vec<_>>(), vec![vec![0, 0, 0]]);

        let small = g.clone().with_budget(100);
        assert!(matches!(small.codewords(), Err(CodeError::BudgetExceeded { .. })));
    }

    #[test]
    fn messages_run_in_lexicographic_order() {
        let c = LinearCode::from_generator_matrix(f(3), 2, vec![vec![1, 0], vec![0, 1]], InnerProduct::Euclidean).unwrap();
        let words: Vec<_> = c.codewords().unwrap().collect();
        let expected: Vec<Vec<Symbol>> = (0..3).flat_map(|a| (0..3).map(move |b| vec![a, b])).collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn puncturing() {
        let rep3 = LinearCode::from_generator_matrix(f(2), 3, vec![vec![1, 1, 1]], InnerProduct::Euclidean).unwrap();
        let p = rep3.puncture(1).unwrap();
        assert_eq!(p, LinearCode::from_generator_matrix(f(2), 2, vec![vec![1, 1]], InnerProduct::Euclidean).unwrap());
        let t = LinearCode::catalog("tetracode").unwrap();
        for i in 1..=4 {
            let p = t.puncture(i).unwrap();
            assert_eq!((p.length(), p.size()), (3, Some(9)));
        }
        assert!(matches!(t.puncture(0), Err(CodeError::CoordinateOutOfRange { .. })));
        assert!(matches!(t.puncture(5), Err(CodeError::CoordinateOutOfRange { .. })));
        let z = LinearCode::from_generator_matrix(f(3), 4, vec![], InnerProduct::Euclidean).unwrap();
        assert_eq!(z.puncture(2).unwrap().dimension(), 0);
        assert_eq!(z.punctured_enumerator_multiset(2).unwrap(), SparsePoly::parse("x^3", 0).unwrap());
    }

    #[test]
    fn types() {
        let ty = |name: &str| LinearCode::catalog(name).unwrap().type_check().unwrap();
        assert_eq!(ty("tetracode"), Some(CodeType::III));
        assert_eq!(ty("golay12"), Some(CodeType::III));
        assert_eq!(ty("i2"), Some(CodeType::IV));
        assert_eq!(ty("hexacode"), Some(CodeType::IV));
        let z = LinearCode::from_generator_matrix(f(3), 4, vec![], InnerProduct::Euclidean).unwrap();
        assert_eq!(z.type_check().unwrap(), None);
        let rep2 = LinearCode::from_generator_matrix(f(2), 2, vec![vec![1, 1]], InnerProduct::Euclidean).unwrap();
        assert_eq!(rep2.type_check().unwrap(), Some(CodeType::I));
    }

    #[test]
    fn catalog_composition() {
        let c = LinearCode::catalog("tetracode^2").unwrap();
        assert_eq!((c.length(), c.dimension()), (8, 4));
        assert_eq!(LinearCode::catalog("tetracode+tetracode").unwrap(), c);
        assert_eq!(LinearCode::catalog("i2^2").unwrap().weight_distribution().unwrap(), vec![1, 0, 6, 0, 9]);
        assert_eq!(LinearCode::catalog("golay12").unwrap().minimum_distance().unwrap(), Some(6));
        assert_eq!(LinearCode::catalog("hexacode").unwrap().weight_distribution().unwrap(), vec![1, 0, 0, 0, 45, 0, 18]);
        assert!(matches!(LinearCode::catalog("nope"), Err(CodeError::UnknownCode(_))));
        assert!(matches!(LinearCode::catalog("tetracode^0"), Err(CodeError::UnknownCode(_))));
        assert!(matches!(LinearCode::catalog("tetracode+i2"), Err(CodeError::Incompatible)));
    }

    #[test]
    fn file_format() {
        let text = "# the tetracode\nq=3^1 n=4 ip=euclidean\n1 0 1 1\n0 1 1 2 # second row\n";
        let c = LinearCode::parse(text).unwrap();
        assert_eq!(c, LinearCode::catalog("tetracode").unwrap());
        assert_eq!(LinearCode::parse(&c.to_text()).unwrap(), c);

        let h = LinearCode::catalog("hexacode").unwrap();
        assert_eq!(LinearCode::parse(&h.to_text()).unwrap(), h);
        let f4 = "q=2^2 n=2 ip=hermitian\n1.0 1.0\n";
        assert_eq!(LinearCode::parse(f4).unwrap(), LinearCode::catalog("i2").unwrap());

        let bad_row = "q=3^1 n=4 ip=euclidean\n1 0 1\n";
        assert!(matches!(LinearCode::parse(bad_row), Err(CodeError::Parse { line: 2, .. })));
        let bad_symbol = "q=3^1 n=2\n\n1 7\n";
        assert!(matches!(LinearCode::parse(bad_symbol), Err(CodeError::Parse { line: 3, .. })));
        assert!(matches!(LinearCode::parse("n=2\n1 1\n"), Err(CodeError::Parse { line: 1, .. })));
        assert!(matches!(LinearCode::parse(""), Err(CodeError::Parse { .. })));
    }
}
