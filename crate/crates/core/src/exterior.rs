//! The graded exterior algebra `∧•V*` of a finite-dimensional space.
//!
//! A monomial `e^{i1…ik}` is a [`MultiIndex`] (bit set of the indices). Within
//! each degree the basis is ordered lexicographically on the increasing index
//! tuples; every matrix in this crate uses that order. Indices are 0-based in
//! the API and 1-based when rendered.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::{binomial, Field};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("cannot combine forms of degree {left} and {right}")]
    MixedDegree { left: usize, right: usize },
    #[error("expected a form of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimensionTooLarge(usize),
}

/// A strictly increasing tuple of indices, stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u32) -> Self {
        MultiIndex(bits)
    }

    pub fn single(i: usize) -> Self {
        MultiIndex(1 << i)
    }

    /// From 0-based indices in any order; `None` if an index repeats.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i < MAX_DIM, "index {i} beyond MAX_DIM");
            if bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(MultiIndex(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_disjoint(self, other: MultiIndex) -> bool {
        self.0 & other.0 == 0
    }

    /// Increasing 0-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Number of elements of `self` strictly below `i`.
    fn count_below(self, i: usize) -> u32 {
        (self.0 & ((1u32 << i) - 1)).count_ones()
    }

    /// Sign and product of `e^self ∧ e^other`, or `None` if they share an index.
    pub fn wedge(self, other: MultiIndex) -> Option<(bool, MultiIndex)> {
        if !self.is_disjoint(other) {
            return None;
        }
        // Each pair (i in self, j in other) with i > j costs one transposition.
        let inversions: u32 = other.indices().map(|j| (self.0 >> (j + 1)).count_ones()).sum();
        Some((inversions % 2 == 1, MultiIndex(self.0 | other.0)))
    }

    /// `ι_{e_i} e^self`: `None` if `i` is absent, else the sign and the remaining monomial.
    pub fn interior(self, i: usize) -> Option<(bool, MultiIndex)> {
        if !self.contains(i) {
            return None;
        }
        Some((self.count_below(i) % 2 == 1, MultiIndex(self.0 & !(1 << i))))
    }

    /// Position in the lexicographic basis of degree `self.degree()` over `dim` indices.
    pub fn lex_rank(self, dim: usize) -> usize {
        let k = self.degree();
        let mut rank = 0;
        let mut next = 0;
        for (pos, a) in self.indices().enumerate() {
            for x in next..a {
                rank += binomial(dim - 1 - x, k - pos - 1);
            }
            next = a + 1;
        }
        rank
    }

    /// Renders the tuple, 1-based: `136` or `[1,3,10]` when `dim > 9`.
    pub fn render(self, dim: usize) -> String {
        if dim > 9 {
            let parts: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
            format!("[{}]", parts.join(","))
        } else {
            self.indices().map(|i| char::from(b'1' + i as u8)).collect()
        }
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(other.indices())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "e{{{}}}", parts.join(","))
    }
}

/// All `binomial(dim, k)` monomials of degree `k`, in lexicographic order.
pub fn monomial_basis(dim: usize, k: usize) -> Vec<MultiIndex> {
    fn extend(dim: usize, k: usize, start: usize, acc: u32, out: &mut Vec<MultiIndex>) {
        if k == 0 {
            out.push(MultiIndex(acc));
            return;
        }
        for i in start..=dim - k {
            extend(dim, k - 1, i + 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::with_capacity(binomial(dim, k));
    if k <= dim {
        extend(dim, k, 0, 0, &mut out);
    }
    out
}

/// A homogeneous element of `∧^degree V*`, stored sparsely.
#[derive(Clone, PartialEq, Eq)]
pub struct Form<T> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, T>,
}

impl<T: Field> Form<T> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Form { dim, degree, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: T) -> Self {
        Self::monomial(dim, MultiIndex::EMPTY, c)
    }

    /// The degree-0 unit `1`.
    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, T::one())
    }

    pub fn monomial(dim: usize, index: MultiIndex, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        Form { dim, degree: index.degree(), terms }
    }

    /// `e^{i1…ik}` from 1-based indices, as written in structure equations.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        let idx = MultiIndex::from_indices(&zero_based).expect("repeated index");
        Self::monomial(dim, idx, T::one())
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Self, ExteriorError>
    where
        I: IntoIterator<Item = (MultiIndex, T)>,
    {
        let mut form = Self::zero(dim, degree);
        for (idx, c) in terms {
            if idx.degree() != degree {
                return Err(ExteriorError::MixedDegree { left: degree, right: idx.degree() });
            }
            if let Some(m) = idx.max_index() {
                if m >= dim {
                    return Err(ExteriorError::IndexOutOfRange { index: m + 1, dim });
                }
            }
            form.add_term(idx, c);
        }
        Ok(form)
    }

    fn add_term(&mut self, idx: MultiIndex, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: MultiIndex) -> T {
        self.terms.get(&idx).cloned().unwrap_or_else(T::zero)
    }

    fn compatible(&self, other: &Self) -> Result<usize, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimMismatch { left: self.dim, right: other.dim });
        }
        if self.degree == other.degree || other.is_zero() {
            Ok(self.degree)
        } else if self.is_zero() {
            Ok(other.degree)
        } else {
            Err(ExteriorError::MixedDegree { left: self.degree, right: other.degree })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        let degree = self.compatible(other)?;
        let mut out = self.clone();
        out.degree = degree;
        for (idx, c) in &other.terms {
            out.add_term(*idx, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(i, x)| (*i, x.clone() * c.clone())).collect(),
        }
    }

    /// Exterior product. Products beyond the top degree are the zero form.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimMismatch { left: self.dim, right: other.dim });
        }
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Ok(Self::zero(self.dim, 0));
        }
        let mut out = Self::zero(self.dim, degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((neg, idx)) = a.wedge(*b) {
                    let c = x.clone() * y.clone();
                    out.add_term(idx, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `self^p` under the wedge product (`1` for `p = 0`).
    pub fn wedge_power(&self, p: usize) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..p {
            acc = acc.wedge(self).expect("same dimension");
        }
        acc
    }

    /// Interior product `ι_{e_i}` with the `i`-th basis vector.
    pub fn interior(&self, i: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(self.dim, 0);
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.terms {
            if let Some((neg, rest)) = idx.interior(i) {
                out.add_term(rest, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// `ι_ξ` for a bivector, with `ι_{x∧y} = ι_x ∘ ι_y`.
    pub fn contract(&self, xi: &Bivector<T>) -> Result<Self, ExteriorError> {
        if self.dim != xi.dim {
            return Err(ExteriorError::DimMismatch { left: self.dim, right: xi.dim });
        }
        if self.degree < 2 {
            return Ok(Self::zero(self.dim, 0));
        }
        let mut out = Self::zero(self.dim, self.degree - 2);
        for (&(i, j), p) in &xi.terms {
            let inner = self.interior(j).interior(i);
            for (idx, c) in inner.terms {
                out.add_term(idx, c * p.clone());
            }
        }
        Ok(out)
    }

    /// Coefficient of `e^{1…dim}`.
    pub fn top_coefficient(&self) -> Result<T, ExteriorError> {
        if self.is_zero() {
            return Ok(T::zero());
        }
        if self.degree != self.dim {
            return Err(ExteriorError::WrongDegree { expected: self.dim, found: self.degree });
        }
        Ok(self.coefficient(MultiIndex((((1u64) << self.dim) - 1) as u32)))
    }

    /// Coefficient vector in the lexicographic monomial basis.
    pub fn to_coords(&self) -> Vec<T> {
        let mut v = vec![T::zero(); binomial(self.dim, self.degree)];
        for (idx, c) in &self.terms {
            v[idx.lex_rank(self.dim)] = c.clone();
        }
        v
    }

    pub fn from_coords(dim: usize, degree: usize, coords: &[T]) -> Self {
        let basis = monomial_basis(dim, degree);
        assert_eq!(basis.len(), coords.len(), "coordinate vector has the wrong length");
        let terms = basis
            .into_iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        Form { dim, degree, terms }
    }

    /// Substitutes `e^j ↦ Σ_l m[j][l] f^l` for every generator.
    pub fn substitute(&self, m: &Matrix<T>) -> Self {
        assert_eq!((m.nrows(), m.ncols()), (self.dim, self.dim), "substitution matrix shape");
        let images: Vec<Self> = (0..self.dim)
            .map(|j| {
                let terms = (0..self.dim).map(|l| (MultiIndex::single(l), m.get(j, l).clone()));
                Self::from_terms(self.dim, 1, terms).expect("valid 1-form")
            })
            .collect();
        let mut out = Self::zero(self.dim, self.degree);
        for (idx, c) in &self.terms {
            let mut prod = Self::scalar(self.dim, c.clone());
            for j in idx.indices() {
                prod = prod.wedge(&images[j]).expect("same dimension");
            }
            out = out.try_add(&prod).expect("same degree");
        }
        out
    }

    /// Re-embeds into dimension `dim`, shifting every index by `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        let terms = self.terms.iter().map(|(idx, c)| (MultiIndex(idx.0 << offset), c.clone()));
        Form::from_terms(dim, self.degree, terms).expect("embedding fits")
    }

    fn render_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, c) in &self.terms {
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if idx.degree() == 0 {
                out.push_str(&magnitude.to_string());
                continue;
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(prefix);
            out.push_str(&idx.render(self.dim));
        }
        out
    }

    /// Canonical rendering, e.g. `e16+e24+e35` or `1/2*e136-1/2*e234`.
    pub fn render(&self) -> String {
        self.render_with("e")
    }

    /// Rendering in structure-equation notation, e.g. `14-23`.
    pub fn render_compact(&self) -> String {
        self.render_with("")
    }
}

impl<T: Field> fmt::Display for Form<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<T: fmt::Display> fmt::Debug for Form<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form(dim {}, deg {}:", self.dim, self.degree)?;
        for (idx, c) in &self.terms {
            write!(f, " {c}*{idx:?}")?;
        }
        write!(f, ")")
    }
}

impl<T: Field> std::ops::Neg for &Form<T> {
    type Output = Form<T>;

    fn neg(self) -> Form<T> {
        self.scale(&-T::one())
    }
}

impl<T: Field> std::ops::Add for &Form<T> {
    type Output = Form<T>;

    fn add(self, rhs: &Form<T>) -> Form<T> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Field> std::ops::Sub for &Form<T> {
    type Output = Form<T>;

    fn sub(self, rhs: &Form<T>) -> Form<T> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// An element of `∧²V`, stored once per index pair `i < j` as the
/// coefficient of `e_i ∧ e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bivector<T: Field> {
    dim: usize,
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Field> Bivector<T> {
    /// From an antisymmetric matrix `p`: `Σ_{i<j} p[i][j] e_i ∧ e_j`.
    pub fn from_antisymmetric(p: &Matrix<T>) -> Self {
        let dim = p.nrows();
        let mut terms = BTreeMap::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let c = p.get(i, j).clone();
                if !c.is_zero() {
                    terms.insert((i, j), c);
                }
            }
        }
        Bivector { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_i ∧ e_j` (antisymmetric in `i, j`).
    pub fn coefficient(&self, i: usize, j: usize) -> T {
        match i.cmp(&j) {
            Ordering::Less => self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero),
            Ordering::Greater => -self.coefficient(j, i),
            Ordering::Equal => T::zero(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Bivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}

/// Matrix of a linear map `∧^k → ∧^{k+shift}` given by its action on basis
/// monomials. Columns index the source basis, rows the target basis.
pub fn operator_matrix<T, F>(dim: usize, k: usize, shift: isize, f: F) -> Matrix<T>
where
    T: Field,
    F: Fn(MultiIndex) -> Form<T>,
{
    let target = k as isize + shift;
    let rows = if (0..=dim as isize).contains(&target) { binomial(dim, target as usize) } else { 0 };
    let source = monomial_basis(dim, k);
    let mut m = Matrix::zeros(rows, source.len());
    for (col, idx) in source.into_iter().enumerate() {
        let image = f(idx);
        if image.is_zero() {
            continue;
        }
        assert_eq!(image.degree() as isize, target, "operator produced a form of unexpected degree");
        for (t, c) in image.terms() {
            m.set(t.lex_rank(dim), col, c.clone());
        }
    }
    m
}

/// A homogeneous linear operator on `∧•V*`, one matrix block per source degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedOperator<T: Field> {
    dim: usize,
    shift: isize,
    blocks: Vec<Matrix<T>>,
}

fn block_rows(dim: usize, k: usize, shift: isize) -> usize {
    let t = k as isize + shift;
    if (0..=dim as isize).contains(&t) {
        binomial(dim, t as usize)
    } else {
        0
    }
}

impl<T: Field> GradedOperator<T> {
    pub fn from_fn<F>(dim: usize, shift: isize, f: F) -> Self
    where
        F: Fn(MultiIndex) -> Form<T>,
    {
        let blocks = (0..=dim).map(|k| operator_matrix(dim, k, shift, &f)).collect();
        GradedOperator { dim, shift, blocks }
    }

    pub fn from_blocks(dim: usize, shift: isize, blocks: Vec<Matrix<T>>) -> Self {
        assert_eq!(blocks.len(), dim + 1, "one block per degree");
        for (k, b) in blocks.iter().enumerate() {
            assert_eq!(
                (b.nrows(), b.ncols()),
                (block_rows(dim, k, shift), binomial(dim, k)),
                "block {k} has the wrong shape"
            );
        }
        GradedOperator { dim, shift, blocks }
    }

    pub fn zero(dim: usize, shift: isize) -> Self {
        let blocks = (0..=dim).map(|k| Matrix::zeros(block_rows(dim, k, shift), binomial(dim, k))).collect();
        GradedOperator { dim, shift, blocks }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(dim, |_| T::one())
    }

    /// Multiplication by `c(k)` on degree `k`.
    pub fn diagonal(dim: usize, c: impl Fn(usize) -> T) -> Self {
        let blocks = (0..=dim).map(|k| Matrix::identity(binomial(dim, k)).scale(&c(k))).collect();
        GradedOperator { dim, shift: 0, blocks }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    /// Block acting on degree `k` (empty for degrees outside `0..=dim`).
    pub fn block(&self, k: usize) -> &Matrix<T> {
        &self.blocks[k]
    }

    pub fn target_degree(&self, k: usize) -> Option<usize> {
        let t = k as isize + self.shift;
        (0..=self.dim as isize).contains(&t).then_some(t as usize)
    }

    pub fn apply(&self, form: &Form<T>) -> Form<T> {
        assert_eq!(form.dim(), self.dim, "operator and form dimensions differ");
        let Some(target) = self.target_degree(form.degree()) else {
            return Form::zero(self.dim, 0);
        };
        if form.is_zero() {
            return Form::zero(self.dim, target);
        }
        let v = self.blocks[form.degree()].mul_vec(&form.to_coords());
        Form::from_coords(self.dim, target, &v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        let shift = self.shift + other.shift;
        let blocks = (0..=self.dim)
            .map(|k| match other.target_degree(k) {
                Some(mid) => self.block(mid) * other.block(k),
                None => Matrix::zeros(block_rows(self.dim, k, shift), binomial(self.dim, k)),
            })
            .collect();
        GradedOperator { dim: self.dim, shift, blocks }
    }

    pub fn pow(&self, p: usize) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..p {
            acc = self.compose(&acc);
        }
        acc
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix<T>, &Matrix<T>) -> Matrix<T>) -> Self {
        assert_eq!((self.dim, self.shift), (other.dim, other.shift), "operators are not of the same type");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect();
        GradedOperator { dim: self.dim, shift: self.shift, blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &T) -> Self {
        GradedOperator { dim: self.dim, shift: self.shift, blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    /// Multiplies block `k` by `c(k)`.
    pub fn scale_by_degree(&self, c: impl Fn(usize) -> T) -> Self {
        GradedOperator {
            dim: self.dim,
            shift: self.shift,
            blocks: self.blocks.iter().enumerate().map(|(k, b)| b.scale(&c(k))).collect(),
        }
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// First degree whose block differs from `other`'s, if any.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if (self.dim, self.shift) != (other.dim, other.shift) {
            return Some(0);
        }
        (0..=self.dim).find(|&k| self.blocks[k] != other.blocks[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn e(dim: usize, idx: &[usize]) -> Form<Rational> {
        Form::basis(dim, idx)
    }

    #[test]
    fn lex_basis() {
        let b: Vec<String> = monomial_basis(4, 2).iter().map(|m| m.render(4)).collect();
        assert_eq!(b, ["12", "13", "14", "23", "24", "34"]);
        assert_eq!(monomial_basis(5, 0), vec![MultiIndex::EMPTY]);
        assert_eq!(monomial_basis(5, 5).len(), 1);
        assert_eq!(monomial_basis(5, 5)[0].render(5), "12345");
        assert!(monomial_basis(3, 4).is_empty());
        for k in 0..=6 {
            for (pos, m) in monomial_basis(6, k).into_iter().enumerate() {
                assert_eq!(m.lex_rank(6), pos);
            }
        }
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(e(4, &[1]).wedge(&e(4, &[2])).unwrap(), e(4, &[1, 2]));
        assert_eq!(e(4, &[2]).wedge(&e(4, &[1])).unwrap(), -&e(4, &[1, 2]));
        assert_eq!(e(4, &[1, 3]).wedge(&e(4, &[2, 4])).unwrap(), -&e(4, &[1, 2, 3, 4]));
        assert!(e(4, &[1, 3]).wedge(&e(4, &[3])).unwrap().is_zero());
        assert_eq!(
            e(4, &[1]).wedge(&e(3, &[1])),
            Err(ExteriorError::DimMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        assert_eq!(
            e(4, &[1]).try_add(&e(4, &[1, 2])),
            Err(ExteriorError::MixedDegree { left: 1, right: 2 })
        );
        let z = Form::<Rational>::zero(4, 0);
        assert_eq!(z.try_add(&e(4, &[1, 2])).unwrap(), e(4, &[1, 2]));
    }

    #[test]
    fn contraction_of_darboux_pair() {
        let mut p = Matrix::<Rational>::zeros(2, 2);
        p.set(0, 1, Rational::from_int(1));
        p.set(1, 0, Rational::from_int(-1));
        let pi = Bivector::from_antisymmetric(&p);
        // ι_{e1∧e2} e^{12} = ι_{e1}(ι_{e2} e^{12}) = ι_{e1}(−e^1) = −1.
        assert_eq!(e(2, &[1, 2]).contract(&pi).unwrap(), Form::scalar(2, Rational::from_int(-1)));
        assert!(e(2, &[1]).contract(&pi).unwrap().is_zero());
        assert!(Form::<Rational>::one(2).contract(&pi).unwrap().is_zero());
    }

    #[test]
    fn top_coefficient_of_symplectic_power() {
        // (e16 + e35 + e24)^3: every ordering of the three commuting 2-forms
        // contributes e^{16}∧e^{35}∧e^{24} = −e^{123456}, so the total is −3! = −6.
        let omega = &(&e(6, &[1, 6]) + &e(6, &[3, 5])) + &e(6, &[2, 4]);
        let top = omega.wedge_power(3).top_coefficient().unwrap();
        assert_eq!(top, Rational::from_int(-6));
        assert_eq!(e(6, &[1, 2, 3, 4, 5, 6]).top_coefficient().unwrap(), Rational::from_int(1));
        assert_eq!(Form::<Rational>::zero(6, 6).top_coefficient().unwrap(), Rational::from_int(0));
    }

    #[test]
    fn rendering() {
        let f = &(&e(6, &[1, 6]).scale(&Rational::from_frac(1, 2)) - &e(6, &[2, 4])) + &e(6, &[3, 5]);
        assert_eq!(f.render(), "1/2*e16-e24+e35");
        assert_eq!(f.render_compact(), "1/2*16-24+35");
        assert_eq!(Form::<Rational>::zero(3, 1).render(), "0");
        assert_eq!(Form::scalar(3, Rational::from_frac(-3, 2)).render(), "-3/2");
        assert_eq!(e(10, &[1, 10]).render(), "e[1,10]");
    }

    #[test]
    fn operator_matrix_shapes() {
        let id = GradedOperator::<Rational>::from_fn(6, 0, |m| Form::monomial(6, m, Rational::from_int(1)));
        assert_eq!(id, GradedOperator::identity(6));
        let omega = &(&e(6, &[1, 4]) + &e(6, &[2, 5])) + &e(6, &[3, 6]);
        let l = GradedOperator::from_fn(6, 2, |m| omega.wedge(&Form::monomial(6, m, Rational::from_int(1))).unwrap());
        assert_eq!((l.block(2).nrows(), l.block(2).ncols()), (15, 15));
        assert_eq!((l.block(5).nrows(), l.block(5).ncols()), (0, 6));
    }

    #[test]
    fn substitution_by_permutation() {
        // e^1 ↦ f^2, e^2 ↦ f^1 turns e^{12} into f^{21} = −f^{12}.
        let m = Matrix::from_rows(
            2,
            vec![
                vec![Rational::from_int(0), Rational::from_int(1)],
                vec![Rational::from_int(1), Rational::from_int(0)],
            ],
        );
        assert_eq!(e(2, &[1, 2]).substitute(&m), -&e(2, &[1, 2]));
    }
}
