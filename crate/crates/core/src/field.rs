//! Exact arithmetic and linear algebra over prime fields GF(p).
//!
//! Everything downstream (tensors, polynomials, the additive machinery) sits
//! on the types here: [`FieldSpec`] for the modulus, [`FVector`]/[`FMatrix`]
//! for coordinates, and [`Subspace`] for linear subspaces kept permanently in
//! reduced row echelon form so that equality is structural and enumeration
//! order is deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime field GF(p), 2 <= p <= 2^16. Primality is checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldSpec {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p > (1 << 16) {
            return Err(Error::InvalidInput(format!(
                "field modulus {p} out of range [2, 2^16]"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    /// GF(2) without the primality scan; handy in tests and fast paths.
    pub fn gf2() -> Self {
        FieldSpec { p: 2 }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    pub fn same_as(&self, other: &FieldSpec) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.p, other.p))
        }
    }
}

/// A coordinate vector over GF(p); every entry is a reduced residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector {
    field: FieldSpec,
    coords: Vec<u32>,
}

impl FVector {
    pub fn new(field: FieldSpec, coords: Vec<u32>) -> Self {
        let coords = coords.into_iter().map(|c| c % field.p()).collect();
        FVector { field, coords }
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        FVector {
            field,
            coords: vec![0; n],
        }
    }

    pub fn standard_basis(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        FVector { field, coords }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &FVector) -> FVector {
        debug_assert_eq!(self.len(), other.len());
        let f = self.field;
        FVector {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FVector) -> FVector {
        debug_assert_eq!(self.len(), other.len());
        let f = self.field;
        FVector {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> FVector {
        let f = self.field;
        FVector {
            field: f,
            coords: self.coords.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn dot(&self, other: &FVector) -> u32 {
        debug_assert_eq!(self.len(), other.len());
        let f = self.field;
        let mut acc = 0u64;
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            acc += a as u64 * b as u64;
        }
        f.reduce(acc)
    }

    /// Position in the lex enumeration of GF(p)^n: the first coordinate is
    /// the most significant digit.
    pub fn lex_index(&self) -> u128 {
        let p = self.field.p() as u128;
        let mut idx = 0u128;
        for &c in &self.coords {
            idx = idx * p + c as u128;
        }
        idx
    }

    pub fn from_lex_index(field: FieldSpec, n: usize, mut idx: u128) -> Self {
        let p = field.p() as u128;
        let mut coords = vec![0u32; n];
        for slot in coords.iter_mut().rev() {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        FVector { field, coords }
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let data = data.into_iter().map(|c| c % field.p()).collect();
        FMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = FMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: &[FVector], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r.coords());
        }
        FMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> FVector {
        FVector {
            field: self.field,
            coords: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    /// Matrix-vector product Mv.
    pub fn mul_vec(&self, v: &FVector) -> FVector {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        let coords = (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc += self.get(r, c) as u64 * v.get(c) as u64;
                }
                f.reduce(acc)
            })
            .collect();
        FVector {
            field: f,
            coords,
        }
    }

    /// The unique reduced row echelon form; the row space is preserved.
    pub fn rref(&self) -> FMatrix {
        let f = self.field;
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.get(pivot_row, c);
                    let b = m.get(src, c);
                    m.set(pivot_row, c, b);
                    m.set(src, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col));
            for c in 0..m.cols {
                m.set(pivot_row, c, f.mul(m.get(pivot_row, c), inv));
            }
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(pivot_row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows)
            .filter(|&i| (0..r.cols).any(|c| r.get(i, c) != 0))
            .count()
    }

    /// Right kernel {v : Mv = 0} as a subspace of GF(p)^cols.
    pub fn kernel(&self) -> Subspace {
        let f = self.field;
        let r = self.rref();
        let mut pivots = Vec::new(); // (row, col)
        for row in 0..r.rows {
            if let Some(col) = (0..r.cols).find(|&c| r.get(row, c) != 0) {
                pivots.push((row, col));
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..r.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0u32; r.cols];
            v[free] = 1;
            for &(row, col) in &pivots {
                // pivot entry is 1, so v[col] = -r[row][free]
                v[col] = f.neg(r.get(row, free));
            }
            basis.push(FVector {
                field: f,
                coords: v,
            });
        }
        Subspace::from_spanning(f, r.cols, basis)
    }

    /// Solves Mx = b, returning any one solution.
    pub fn solve(&self, b: &FVector) -> Option<FVector> {
        assert_eq!(self.rows, b.len());
        let f = self.field;
        let mut aug = FMatrix::zero(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b.get(r));
        }
        let aug = aug.rref();
        let mut x = vec![0u32; self.cols];
        for row in 0..aug.rows {
            let Some(col) = (0..=self.cols).find(|&c| aug.get(row, c) != 0) else {
                continue;
            };
            if col == self.cols {
                return None; // row 0 = nonzero: inconsistent
            }
            x[col] = aug.get(row, self.cols);
        }
        Some(FVector {
            field: f,
            coords: x,
        })
    }
}

/// A linear subspace of GF(p)^n stored as an RREF basis, so two subspaces are
/// equal iff their representations are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<FVector>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| FVector::standard_basis(field, ambient, i))
            .collect();
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    /// Span of an arbitrary set of vectors, reduced to RREF.
    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<FVector>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = FMatrix::from_rows(field, &vectors, ambient).rref();
        let basis = (0..m.rows())
            .map(|r| m.row(r))
            .filter(|row| !row.is_zero())
            .collect();
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    #[inline]
    pub fn basis(&self) -> &[FVector] {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains(&self, v: &FVector) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the RREF basis; zero remainder = membership.
        let f = self.field;
        let mut rem = v.clone();
        for b in &self.basis {
            let pivot = b.coords().iter().position(|&c| c != 0).unwrap();
            let coeff = rem.get(pivot);
            if coeff != 0 {
                rem = rem.sub(&b.scale(coeff));
            }
        }
        let _ = f;
        rem.is_zero()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(self.field, self.ambient, vectors))
    }

    /// Intersection via (A^perp + B^perp)^perp; exact over a prime field
    /// because the standard dot product is nondegenerate.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let a = self.orth_complement();
        let b = other.orth_complement();
        Ok(a.sum(&b)?.orth_complement())
    }

    /// {w : w.s = 0 for all s in self} under the standard dot product.
    pub fn orth_complement(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        let m = FMatrix::from_rows(self.field, &self.basis, self.ambient);
        m.kernel()
    }

    /// All p^dim vectors, in lex order over basis coefficient tuples (the
    /// first basis coefficient is the most significant digit).
    pub fn enumerate(&self) -> SubspaceIter<'_> {
        SubspaceIter {
            space: self,
            next: 0,
            count: (self.field.p() as u128)
                .checked_pow(self.dim() as u32)
                .expect("subspace too large to enumerate"),
        }
    }

    pub fn point_count(&self) -> u128 {
        (self.field.p() as u128)
            .checked_pow(self.dim() as u32)
            .expect("subspace too large to count")
    }

    /// Deterministically drops the dimension by one: intersects with the
    /// kernel of the lex-first coordinate functional that does not vanish on
    /// the subspace. Returns `None` for the zero subspace.
    pub fn shrink_dim_by_one(&self) -> Option<Subspace> {
        if self.dim() == 0 {
            return None;
        }
        for i in 0..self.ambient {
            if self.basis.iter().any(|b| b.get(i) != 0) {
                let functional = FVector::standard_basis(self.field, self.ambient, i);
                let hyper = FMatrix::from_rows(self.field, &[functional], self.ambient).kernel();
                let cut = self.intersect(&hyper).expect("same ambient");
                debug_assert_eq!(cut.dim(), self.dim() - 1);
                return Some(cut);
            }
        }
        None
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        self.field.same_as(&other.field)?;
        if self.ambient != other.ambient {
            return Err(Error::ShapeMismatch(format!(
                "ambient dims {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

pub struct SubspaceIter<'a> {
    space: &'a Subspace,
    next: u128,
    count: u128,
}

impl Iterator for SubspaceIter<'_> {
    type Item = FVector;

    fn next(&mut self) -> Option<FVector> {
        if self.next >= self.count {
            return None;
        }
        let p = self.space.field.p() as u128;
        let mut idx = self.next;
        self.next += 1;
        let dim = self.space.dim();
        let mut v = FVector::zero(self.space.field, self.space.ambient);
        // Digits of idx in base p, first basis vector most significant.
        for slot in (0..dim).rev() {
            let digit = (idx % p) as u32;
            idx /= p;
            if digit != 0 {
                v = v.add(&self.space.basis[slot].scale(digit));
            }
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(65536).is_err());
        assert!(FieldSpec::new(65521).is_ok()); // largest prime <= 2^16
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let m = FMatrix::identity(gf(2), 2);
        assert_eq!(m.rref(), m);
    }

    #[test]
    fn rref_collapses_duplicate_rows_gf2() {
        let m = FMatrix::new(gf(2), 2, 2, vec![1, 1, 1, 1]);
        let r = m.rref();
        assert_eq!(r, FMatrix::new(gf(2), 2, 2, vec![1, 1, 0, 0]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_gf3_hand_reduction() {
        // row2 = 2*row1 mod 3, so rref is [[1,2],[0,0]]
        let m = FMatrix::new(gf(3), 2, 2, vec![2, 1, 1, 2]);
        assert_eq!(m.rref(), FMatrix::new(gf(3), 2, 2, vec![1, 2, 0, 0]));
    }

    #[test]
    fn rank_edge_cases() {
        assert_eq!(FMatrix::zero(gf(2), 3, 4).rank(), 0);
        assert_eq!(FMatrix::identity(gf(5), 4).rank(), 4);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = FMatrix::identity(gf(3), 3).kernel();
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = FMatrix::zero(gf(5), 2, 3).kernel();
        assert_eq!(k.dim(), 3);
        assert!(k.is_full());
    }

    #[test]
    fn kernel_of_sum_functional_gf2() {
        let k = FMatrix::new(gf(2), 1, 2, vec![1, 1]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&FVector::new(gf(2), vec![1, 1])));
    }

    #[test]
    fn orth_complement_of_coordinate_line() {
        let s = Subspace::from_spanning(gf(2), 2, vec![FVector::new(gf(2), vec![1, 0])]);
        let perp = s.orth_complement();
        assert_eq!(perp.basis(), &[FVector::new(gf(2), vec![0, 1])]);
    }

    #[test]
    fn orth_complement_extremes() {
        let full = Subspace::full(gf(3), 3);
        assert_eq!(full.orth_complement().dim(), 0);
        let zero = Subspace::zero(gf(3), 3);
        assert!(zero.orth_complement().is_full());
    }

    #[test]
    fn sum_and_intersect_trivia() {
        let s = Subspace::from_spanning(
            gf(2),
            3,
            vec![FVector::new(gf(2), vec![1, 1, 0])],
        );
        assert_eq!(s.sum(&s).unwrap(), s);
        let full = Subspace::full(gf(2), 3);
        assert_eq!(full.intersect(&s).unwrap(), s);
    }

    #[test]
    fn enumerate_yields_distinct_members() {
        let s = Subspace::from_spanning(
            gf(3),
            3,
            vec![
                FVector::new(gf(3), vec![1, 0, 2]),
                FVector::new(gf(3), vec![0, 1, 1]),
            ],
        );
        let pts: Vec<FVector> = s.enumerate().collect();
        assert_eq!(pts.len(), 9);
        let mut dedup = pts.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 9);
        assert!(pts.iter().all(|v| s.contains(v)));
        assert!(pts[0].is_zero());
    }

    #[test]
    fn solve_finds_consistent_solutions() {
        let m = FMatrix::new(gf(5), 2, 3, vec![1, 2, 0, 0, 1, 4]);
        let b = FVector::new(gf(5), vec![3, 2]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // inconsistent system
        let m2 = FMatrix::new(gf(2), 2, 1, vec![1, 1]);
        let b2 = FVector::new(gf(2), vec![0, 1]);
        assert!(m2.solve(&b2).is_none());
    }

    #[test]
    fn shrink_dim_by_one_is_deterministic() {
        let s = Subspace::full(gf(2), 4);
        let t = s.shrink_dim_by_one().unwrap();
        assert_eq!(t.dim(), 3);
        // lex-first functional is the first coordinate
        assert!(t.enumerate().all(|v| v.get(0) == 0));
        assert!(Subspace::zero(gf(2), 4).shrink_dim_by_one().is_none());
    }

    fn random_subspace_gf2(dim_max: usize, n: usize, seed: u64) -> Subspace {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let vectors = (0..dim_max)
            .map(|_| FVector::new(gf(2), (0..n).map(|_| rng.gen_range(0..2)).collect()))
            .collect();
        Subspace::from_spanning(gf(2), n, vectors)
    }

    /// Brute-force span: close the set of vectors under addition and scaling.
    fn brute_span_gf2(vectors: &[FVector], n: usize) -> std::collections::BTreeSet<FVector> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(FVector::zero(gf(2), n));
        loop {
            let mut grew = false;
            let snapshot: Vec<FVector> = set.iter().cloned().collect();
            for v in vectors {
                for s in &snapshot {
                    if set.insert(s.add(v)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    proptest! {
        #[test]
        fn dim_formula_against_brute_force_span(seed_a in 0u64..500, seed_b in 500u64..1000) {
            let n = 6;
            let a = random_subspace_gf2(3, n, seed_a);
            let b = random_subspace_gf2(3, n, seed_b);
            let sum = a.sum(&b).unwrap();
            let inter = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), sum.dim() + inter.dim());

            let mut gens = a.basis().to_vec();
            gens.extend(b.basis().to_vec());
            let brute = brute_span_gf2(&gens, n);
            prop_assert_eq!(brute.len() as u128, sum.point_count());
            for v in sum.enumerate() {
                prop_assert!(brute.contains(&v));
            }
        }

        #[test]
        fn double_orth_complement_is_identity(seed in 0u64..1000) {
            let s = random_subspace_gf2(4, 7, seed);
            prop_assert_eq!(s.orth_complement().orth_complement(), s);
        }

        #[test]
        fn rank_nullity(seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (rows, cols) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let p = *[2u32, 3, 5].iter().nth(rng.gen_range(0..3)).unwrap();
            let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
            let m = FMatrix::new(gf(p), rows, cols, data);
            prop_assert_eq!(m.rank() + m.kernel().dim(), cols);
        }

        #[test]
        fn enumerate_count_matches_dim(seed in 0u64..300) {
            let s = random_subspace_gf2(3, 5, seed);
            let pts: Vec<_> = s.enumerate().collect();
            prop_assert_eq!(pts.len() as u128, s.point_count());
            for v in &pts {
                prop_assert!(s.contains(v));
            }
        }
    }
}
