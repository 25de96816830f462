//! Order-d tensors over GF(p): construction, contraction, flattening and the
//! pure-tensor algebra.
//!
//! Layout is dense row-major with the last index fastest, and the layout is
//! part of the contract: lex indices derived from it are used as census ids
//! and memo keys, so it must never change. Over GF(2) a tensor of at most
//! 128 entries additionally carries a packed bit form whose integer value
//! equals its lex index; the hot loops (entry-wise dots, annihilator sweeps)
//! run on that word.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FMatrix, FVector, FieldSpec};

/// Tensor shape: a field together with mode dimensions (n_1, ..., n_d).
///
/// `d = 0` (the empty shape, a scalar) is permitted internally as the result
/// of a full contraction; user-facing constructors require d >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    field: FieldSpec,
    dims: Vec<usize>,
}

impl Shape {
    pub fn new(field: FieldSpec, dims: Vec<usize>) -> Result<Self> {
        if dims.iter().any(|&n| n == 0) {
            return Err(Error::InvalidInput("zero mode dimension".into()));
        }
        let mut total: u128 = 1;
        for &n in &dims {
            total = total
                .checked_mul(n as u128)
                .ok_or_else(|| Error::InvalidInput("tensor size overflows".into()))?;
        }
        if total > (1 << 32) {
            return Err(Error::InvalidInput(format!(
                "tensor with {total} entries is beyond desk scale"
            )));
        }
        Ok(Shape { field, dims })
    }

    pub(crate) fn scalar(field: FieldSpec) -> Self {
        Shape {
            field,
            dims: Vec::new(),
        }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.dims.len()
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn dim(&self, mode: usize) -> usize {
        self.dims[mode - 1]
    }

    pub fn total_len(&self) -> usize {
        self.dims.iter().product()
    }

    /// Number of distinct tensors of this shape, p^(n_1 ... n_d), if it fits.
    pub fn tensor_count(&self) -> Option<u128> {
        (self.field.p() as u128).checked_pow(self.total_len() as u32)
    }

    /// Shape restricted to the modes of `set`, preserving mode order.
    pub fn restrict(&self, set: &ModeSet) -> Shape {
        Shape {
            field: self.field,
            dims: set.iter().map(|m| self.dims[m - 1]).collect(),
        }
    }

    /// Row-major strides (last index fastest).
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }
}

/// A sorted set of 1-indexed modes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModeSet(Vec<usize>);

impl ModeSet {
    pub fn new(mut modes: Vec<usize>, order: usize) -> Result<Self> {
        modes.sort_unstable();
        modes.dedup();
        if modes.iter().any(|&m| m == 0 || m > order) {
            return Err(Error::InvalidInput(format!(
                "mode out of range for order-{order} tensor"
            )));
        }
        Ok(ModeSet(modes))
    }

    pub fn singleton(mode: usize) -> Self {
        ModeSet(vec![mode])
    }

    /// [1, ..., k]
    pub fn prefix(k: usize) -> Self {
        ModeSet((1..=k).collect())
    }

    pub fn complement(&self, order: usize) -> ModeSet {
        ModeSet((1..=order).filter(|m| !self.contains(*m)).collect())
    }

    #[inline]
    pub fn contains(&self, mode: usize) -> bool {
        self.0.binary_search(&mode).is_ok()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn modes(&self) -> &[usize] {
        &self.0
    }

    pub fn is_proper_nonempty(&self, order: usize) -> bool {
        !self.0.is_empty() && self.0.len() < order
    }

    /// All nonempty subsets of {1, ..., k}, ordered by (cardinality, lex).
    pub fn nonempty_subsets_of_prefix(k: usize) -> Vec<ModeSet> {
        let mut subsets = Vec::new();
        for mask in 1u32..(1 << k) {
            let modes: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            subsets.push(ModeSet(modes));
        }
        subsets.sort_by_key(|s| (s.len(), s.0.clone()));
        subsets
    }
}

/// Dense tensor over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Shape,
    entries: Vec<u32>,
    /// Packed form for GF(2) tensors of <= 128 entries; entry i sits at bit
    /// (len - 1 - i), so the packed word equals the lex index.
    bits: Option<u128>,
}

fn pack_gf2(shape: &Shape, entries: &[u32]) -> Option<u128> {
    if shape.field().p() != 2 || entries.len() > 128 {
        return None;
    }
    let mut bits = 0u128;
    for &e in entries {
        bits = (bits << 1) | e as u128;
    }
    Some(bits)
}

impl Tensor {
    pub fn new(shape: Shape, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.total_len() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for shape of size {}",
                entries.len(),
                shape.total_len()
            )));
        }
        let p = shape.field().p();
        let entries: Vec<u32> = entries.into_iter().map(|e| e % p).collect();
        let bits = pack_gf2(&shape, &entries);
        Ok(Tensor {
            shape,
            entries,
            bits,
        })
    }

    pub fn zero(shape: Shape) -> Self {
        let len = shape.total_len();
        let bits = pack_gf2(&shape, &vec![0; len]);
        Tensor {
            shape,
            entries: vec![0; len],
            bits,
        }
    }

    #[inline]
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.shape.field()
    }

    #[inline]
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.shape.order()
    }

    pub(crate) fn packed_bits(&self) -> Option<u128> {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        match self.bits {
            Some(b) => b == 0,
            None => self.entries.iter().all(|&e| e == 0),
        }
    }

    /// Entry at a (0-indexed) multi-index.
    pub fn get(&self, index: &[usize]) -> u32 {
        self.entries[self.flat_index(index)]
    }

    fn flat_index(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.order());
        let strides = self.shape.strides();
        index.iter().zip(&strides).map(|(&i, &s)| i * s).sum()
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        let f = self.field();
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Tensor::new(self.shape.clone(), entries)
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        let f = self.field();
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Tensor::new(self.shape.clone(), entries)
    }

    pub fn scale(&self, c: u32) -> Tensor {
        let f = self.field();
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        Tensor::new(self.shape.clone(), entries).expect("same shape")
    }

    pub fn neg(&self) -> Tensor {
        self.scale(self.field().neg(1))
    }

    /// Entry-wise dot product r.s (a field element).
    pub fn dot(&self, other: &Tensor) -> Result<u32> {
        self.same_shape(other)?;
        if let (Some(a), Some(b)) = (self.bits, other.bits) {
            return Ok(((a & b).count_ones() & 1) as u32);
        }
        let f = self.field();
        let mut acc = 0u64;
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            acc += a as u64 * b as u64;
            if acc > u64::MAX / 2 {
                acc = f.reduce(acc) as u64;
            }
        }
        Ok(f.reduce(acc))
    }

    /// Contraction against a tensor `s` living on the modes `along`: the
    /// result lives on the complementary modes, with
    /// `(rs)_J = sum_{indices in I} r_(I,J) * s_I`. Contracting along all d
    /// modes yields a scalar tensor whose single entry equals `dot`.
    pub fn contract(&self, s: &Tensor, along: &ModeSet) -> Result<Tensor> {
        let d = self.order();
        let expected = self.shape.restrict(along);
        if s.shape != expected {
            return Err(Error::ShapeMismatch(format!(
                "contraction operand has shape {:?}, expected {:?}",
                s.shape.dims(),
                expected.dims()
            )));
        }
        self.field().same_as(&s.field())?;
        let comp = along.complement(d);
        let out_shape = if comp.is_empty() {
            Shape::scalar(self.field())
        } else {
            self.shape.restrict(&comp)
        };
        let f = self.field();
        let mut out = vec![0u64; out_shape.total_len().max(1)];

        let strides = self.shape.strides();
        let s_strides = s.shape.strides();
        let out_strides = out_shape.strides();
        let in_modes: Vec<usize> = along.iter().map(|m| m - 1).collect();
        let out_modes: Vec<usize> = comp.iter().map(|m| m - 1).collect();

        let mut index = vec![0usize; d];
        for (flat, &val) in self.entries.iter().enumerate() {
            if val != 0 {
                // decompose flat -> multi-index
                let mut rem = flat;
                for (k, &st) in strides.iter().enumerate() {
                    index[k] = rem / st;
                    rem %= st;
                }
                let s_flat: usize = in_modes
                    .iter()
                    .zip(&s_strides)
                    .map(|(&m, &st)| index[m] * st)
                    .sum();
                let sv = s.entries[s_flat];
                if sv != 0 {
                    let out_flat: usize = out_modes
                        .iter()
                        .zip(&out_strides)
                        .map(|(&m, &st)| index[m] * st)
                        .sum();
                    out[out_flat] += val as u64 * sv as u64;
                }
            }
        }
        let entries = out.into_iter().map(|v| f.reduce(v)).collect();
        Tensor::new(out_shape, entries)
    }

    /// Convenience: contract a single mode against a plain vector.
    pub fn contract_vec(&self, v: &FVector, mode: usize) -> Result<Tensor> {
        let along = ModeSet::singleton(mode);
        let vshape = Shape::new(self.field(), vec![v.len()])?;
        let vt = Tensor::new(vshape, v.coords().to_vec())?;
        self.contract(&vt, &along)
    }

    /// Contract against the pure tensor with the given factors on `along`;
    /// `factors[i]` belongs to mode `along.modes()[i]`.
    pub fn contract_pure(&self, factors: &[FVector], along: &ModeSet) -> Result<Tensor> {
        debug_assert_eq!(factors.len(), along.len());
        // Highest mode first so the remaining mode numbers stay valid.
        let mut acc = self.clone();
        for (pos, &mode) in along.modes().iter().enumerate().rev() {
            acc = acc.contract_vec(&factors[pos], mode)?;
        }
        Ok(acc)
    }

    /// The scalar entry of an order-0 tensor.
    pub fn scalar_value(&self) -> u32 {
        debug_assert_eq!(self.order(), 0);
        self.entries[0]
    }

    /// Flattening: modes in `row_modes` index rows (lex, ascending mode
    /// order, last fastest), the complement indexes columns.
    pub fn flatten(&self, row_modes: &ModeSet) -> Result<FMatrix> {
        let d = self.order();
        if !row_modes.is_proper_nonempty(d) {
            return Err(Error::InvalidInput(
                "flattening requires a proper nonempty mode set".into(),
            ));
        }
        let col_modes = row_modes.complement(d);
        let row_shape = self.shape.restrict(row_modes);
        let col_shape = self.shape.restrict(&col_modes);
        let (nrows, ncols) = (row_shape.total_len(), col_shape.total_len());
        let mut data = vec![0u32; nrows * ncols];

        let strides = self.shape.strides();
        let row_strides = row_shape.strides();
        let col_strides = col_shape.strides();
        let row_idx: Vec<usize> = row_modes.iter().map(|m| m - 1).collect();
        let col_idx: Vec<usize> = col_modes.iter().map(|m| m - 1).collect();

        let mut index = vec![0usize; d];
        for (flat, &val) in self.entries.iter().enumerate() {
            let mut rem = flat;
            for (k, &st) in strides.iter().enumerate() {
                index[k] = rem / st;
                rem %= st;
            }
            let r: usize = row_idx
                .iter()
                .zip(&row_strides)
                .map(|(&m, &st)| index[m] * st)
                .sum();
            let c: usize = col_idx
                .iter()
                .zip(&col_strides)
                .map(|(&m, &st)| index[m] * st)
                .sum();
            data[r * ncols + c] = val;
        }
        Ok(FMatrix::new(self.field(), nrows, ncols, data))
    }

    /// T(v^1, ..., v^d) = sum over entries of t_e * prod_k v^k_(e_k).
    pub fn multilinear_eval(&self, factors: &[FVector]) -> Result<u32> {
        if factors.len() != self.order() {
            return Err(Error::ShapeMismatch(format!(
                "{} factors for an order-{} tensor",
                factors.len(),
                self.order()
            )));
        }
        for (k, v) in factors.iter().enumerate() {
            if v.len() != self.shape.dims()[k] {
                return Err(Error::ShapeMismatch(format!(
                    "factor {} has length {}, mode needs {}",
                    k + 1,
                    v.len(),
                    self.shape.dims()[k]
                )));
            }
            self.field().same_as(&v.field())?;
        }
        let f = self.field();
        let strides = self.shape.strides();
        let mut acc = 0u64;
        let mut index = vec![0usize; self.order()];
        for (flat, &val) in self.entries.iter().enumerate() {
            if val == 0 {
                continue;
            }
            let mut rem = flat;
            let mut prod = val as u64;
            for (k, &st) in strides.iter().enumerate() {
                index[k] = rem / st;
                rem %= st;
                prod = prod * factors[k].get(index[k]) as u64 % f.p() as u64;
            }
            acc += prod;
        }
        Ok(f.reduce(acc))
    }

    /// The tensor as a flat vector in GF(p)^(n_1 ... n_d), for subspace work.
    pub fn as_fvector(&self) -> FVector {
        FVector::new(self.field(), self.entries.clone())
    }

    pub fn from_fvector(shape: Shape, v: &FVector) -> Result<Tensor> {
        Tensor::new(shape, v.coords().to_vec())
    }

    /// Bijection with [0, p^(n_1 ... n_d)): entries are base-p digits, entry 0
    /// most significant.
    pub fn lex_index(&self) -> u128 {
        if let Some(bits) = self.bits {
            return bits;
        }
        let p = self.field().p() as u128;
        let mut idx = 0u128;
        for &e in &self.entries {
            idx = idx * p + e as u128;
        }
        idx
    }

    pub fn from_lex_index(shape: Shape, mut idx: u128) -> Tensor {
        let p = shape.field().p() as u128;
        let len = shape.total_len();
        let mut entries = vec![0u32; len];
        for slot in entries.iter_mut().rev() {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        Tensor::new(shape, entries).expect("length matches by construction")
    }

    fn same_shape(&self, other: &Tensor) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape.dims(),
                other.shape.dims()
            )));
        }
        Ok(())
    }
}

/// An outer product u^1 x ... x u^d, stored by its factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureTensor {
    factors: Vec<FVector>,
}

impl PureTensor {
    pub fn new(factors: Vec<FVector>) -> Self {
        PureTensor { factors }
    }

    pub fn factors(&self) -> &[FVector] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.len()
    }

    pub fn matches_shape(&self, shape: &Shape) -> bool {
        self.factors.len() == shape.order()
            && self
                .factors
                .iter()
                .zip(shape.dims())
                .all(|(f, &n)| f.len() == n && f.field() == shape.field())
    }

    /// Dense expansion: t_(i_1..i_d) = prod_k (u^k)_(i_k).
    pub fn expand(&self, shape: &Shape) -> Result<Tensor> {
        if !self.matches_shape(shape) {
            return Err(Error::ShapeMismatch(
                "pure tensor factors do not match shape".into(),
            ));
        }
        let f = shape.field();
        let mut entries = vec![1u32];
        for factor in &self.factors {
            let mut next = Vec::with_capacity(entries.len() * factor.len());
            for &e in &entries {
                for &c in factor.coords() {
                    next.push(f.mul(e, c));
                }
            }
            entries = next;
        }
        Tensor::new(shape.clone(), entries)
    }

    /// Restriction to the factors at the given modes.
    pub fn restrict(&self, set: &ModeSet) -> PureTensor {
        PureTensor {
            factors: set.iter().map(|m| self.factors[m - 1].clone()).collect(),
        }
    }

    /// Reassembles a full-order pure tensor from factors on `set` and its
    /// complement, interleaving by mode number.
    pub fn merge(set: &ModeSet, on_set: &PureTensor, on_comp: &PureTensor, order: usize) -> PureTensor {
        let comp = set.complement(order);
        let mut factors: Vec<Option<FVector>> = vec![None; order];
        for (slot, m) in set.iter().enumerate() {
            factors[m - 1] = Some(on_set.factors[slot].clone());
        }
        for (slot, m) in comp.iter().enumerate() {
            factors[m - 1] = Some(on_comp.factors[slot].clone());
        }
        PureTensor {
            factors: factors.into_iter().map(|f| f.unwrap()).collect(),
        }
    }

    /// All factor tuples of a shape, in lex order (mode 1 most significant).
    /// This enumerates the multiset B by tuples, so |B| = prod p^(n_i).
    pub fn enumerate_all(shape: &Shape) -> PureTensorIter {
        let counts: Vec<u128> = shape
            .dims()
            .iter()
            .map(|&n| (shape.field().p() as u128).pow(n as u32))
            .collect();
        let total = counts.iter().product();
        PureTensorIter {
            shape: shape.clone(),
            counts,
            next: 0,
            total,
        }
    }
}

pub struct PureTensorIter {
    shape: Shape,
    counts: Vec<u128>,
    next: u128,
    total: u128,
}

impl Iterator for PureTensorIter {
    type Item = PureTensor;

    fn next(&mut self) -> Option<PureTensor> {
        if self.next >= self.total {
            return None;
        }
        let mut rem = self.next;
        self.next += 1;
        let field = self.shape.field();
        let mut factors = vec![FVector::zero(field, 1); self.shape.order()];
        for k in (0..self.shape.order()).rev() {
            let c = self.counts[k];
            let digit = rem % c;
            rem /= c;
            factors[k] = FVector::from_lex_index(field, self.shape.dims()[k], digit);
        }
        Some(PureTensor { factors })
    }
}

/// JSON form of a tensor: `{"q": p, "shape": [...], "entries": [...]}`.
/// Bit-exact: the entry list must have exactly prod(shape) residues in [0,p).
#[derive(Debug, Serialize, Deserialize)]
pub struct TensorJson {
    pub q: u32,
    pub shape: Vec<usize>,
    pub entries: Vec<u32>,
}

impl TensorJson {
    pub fn from_tensor(t: &Tensor) -> Self {
        TensorJson {
            q: t.field().p(),
            shape: t.shape().dims().to_vec(),
            entries: t.entries().to_vec(),
        }
    }

    pub fn into_tensor(self) -> Result<Tensor> {
        let field = FieldSpec::new(self.q)?;
        if self.shape.is_empty() {
            return Err(Error::InvalidInput("tensor order must be >= 1".into()));
        }
        let shape = Shape::new(field, self.shape)?;
        if self.entries.len() != shape.total_len() {
            return Err(Error::InvalidInput(format!(
                "entries length {} != shape size {}",
                self.entries.len(),
                shape.total_len()
            )));
        }
        if self.entries.iter().any(|&e| e >= self.q) {
            return Err(Error::InvalidInput(format!(
                "entry out of range [0, {})",
                self.q
            )));
        }
        Tensor::new(shape, self.entries)
    }
}
