//! Row reduction, subspaces and quotient spaces.

use std::collections::BTreeMap;

use super::matrix::{vec_ops, Matrix};
use super::scalar::{Field, Scalar};

type SparseRow = Vec<(usize, Scalar)>;

/// Incremental row-echelon basis. Rows are stored sparse with a unit pivot;
/// reduction of an incoming vector scans pivots in increasing column order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut acc: BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut cursor = 0;
        while let Some(c) = acc.range(cursor..).map(|(c, _)| *c).find(|&c| self.pivot_row[c].is_some()) {
            let f = -&acc.remove(&c).unwrap();
            for (j, x) in &self.rows[self.pivot_row[c].unwrap()][1..] {
                let e = acc.entry(*j).or_insert_with(|| self.field.zero());
                e.add_mul(&f, x);
                if e.is_zero() {
                    acc.remove(j);
                }
            }
            cursor = c + 1;
        }
        acc
    }

    fn accumulate<'a, I: IntoIterator<Item = (usize, &'a Scalar)>>(&self, entries: I) -> BTreeMap<usize, Scalar> {
        let mut acc = BTreeMap::new();
        for (j, x) in entries {
            assert!(j < self.ncols, "vector length mismatch");
            if x.is_zero() {
                continue;
            }
            let e = acc.entry(j).or_insert_with(|| self.field.zero());
            *e = &*e + x;
            if e.is_zero() {
                acc.remove(&j);
            }
        }
        acc
    }

    fn push_reduced(&mut self, acc: BTreeMap<usize, Scalar>) -> bool {
        let Some((&p, lead)) = acc.iter().next() else {
            return false;
        };
        let inv = lead.inv().unwrap();
        let row: SparseRow = acc.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Inserts a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let acc = self.reduce(self.accumulate(v.iter().enumerate()));
        self.push_reduced(acc)
    }

    pub fn insert_sparse(&mut self, entries: &[(usize, Scalar)]) -> bool {
        let acc = self.reduce(self.accumulate(entries.iter().map(|(j, x)| (*j, x))));
        self.push_reduced(acc)
    }

    /// Whether `v` lies in the current span.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        self.reduce(self.accumulate(v.iter().enumerate())).is_empty()
    }

    /// Fully reduced rows, sorted by pivot; each row starts at its unit pivot.
    fn into_sparse_rref(self) -> Vec<SparseRow> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut reduced: Vec<Option<SparseRow>> = vec![None; self.ncols];
        let mut out: Vec<SparseRow> = Vec::with_capacity(order.len());
        // later pivots are fully reduced first, so one pass per row suffices
        for &r in order.iter().rev() {
            let row = &self.rows[r];
            let p = row[0].0;
            let mut acc: BTreeMap<usize, Scalar> = row[1..].iter().cloned().collect();
            for (c, x) in &row[1..] {
                if let Some(pr) = &reduced[*c] {
                    let f = -x;
                    acc.remove(c);
                    for (j, y) in &pr[1..] {
                        let e = acc.entry(*j).or_insert_with(|| self.field.zero());
                        e.add_mul(&f, y);
                        if e.is_zero() {
                            acc.remove(j);
                        }
                    }
                }
            }
            let mut full = vec![(p, self.field.one())];
            full.extend(acc);
            reduced[p] = Some(full.clone());
            out.push(full);
        }
        out.reverse();
        out
    }

    /// Fully reduced row-echelon form (rows sorted by pivot) and pivots.
    pub fn into_rref(self) -> (Matrix, Vec<usize>) {
        let field = self.field;
        let n = self.ncols;
        let rows = self.into_sparse_rref();
        let pivots = rows.iter().map(|r| r[0].0).collect();
        let dense = rows
            .into_iter()
            .map(|r| {
                let mut v = vec_ops::zeros(field, n);
                for (j, x) in r {
                    v[j] = x;
                }
                v
            })
            .collect();
        (Matrix::from_rows_with_cols(field, dense, n), pivots)
    }

    /// Basis of `{x : row · x = 0 for every inserted row}`.
    pub fn nullspace(self) -> Subspace {
        let field = self.field;
        let n = self.ncols;
        let (r, pivots) = self.into_rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Echelon::new(field, n);
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec_ops::unit(field, n, f);
            for (k, &p) in pivots.iter().enumerate() {
                let x = r.get(k, f);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            out.insert(v);
        }
        Subspace::from_echelon(out)
    }
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut e = Echelon::new(m.field(), m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    let (r, pivots) = e.into_rref();
    // keep the original row count, padding with zero rows
    let mut rows = r.row_vecs();
    while rows.len() < m.rows() {
        rows.push(vec_ops::zeros(m.field(), m.cols()));
    }
    (Matrix::from_rows_with_cols(m.field(), rows, m.cols()), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new(m.field(), m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    e.rank()
}

/// Some `x` with `a · x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is canonical.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len(), "solve_linear: row mismatch");
    let n = a.cols();
    let mut e = Echelon::new(a.field(), n + 1);
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        row.push(b[i].clone());
        e.insert(row);
    }
    let (r, pivots) = e.into_rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec_ops::zeros(a.field(), n);
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = r.get(k, n).clone();
    }
    Some(x)
}

pub fn nullspace(m: &Matrix) -> Subspace {
    let mut e = Echelon::new(m.field(), m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    e.nullspace()
}

/// `m = c · d` with inner dimension `rank(m)`: `c` holds the pivot columns
/// of `m`, `d` the nonzero rows of its reduced echelon form.
pub fn rank_factor(m: &Matrix) -> (Matrix, Matrix) {
    let mut e = Echelon::new(m.field(), m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    let (d, pivots) = e.into_rref();
    (m.select_cols(&pivots), d)
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(m.field(), n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select_rows(&(0..n).collect::<Vec<_>>()).select_cols(&cols))
}

/// A subspace of `field^ambient` held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_echelon(e: Echelon) -> Self {
        let field = e.field;
        let ambient = e.ncols;
        let (basis, pivots) = e.into_rref();
        Subspace { field, ambient, basis, pivots }
    }

    pub fn span<I: IntoIterator<Item = Vec<Scalar>>>(field: Field, ambient: usize, vecs: I) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vecs {
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Self::from_echelon(Echelon::new(field, ambient))
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::span(field, ambient, (0..ambient).map(|i| vec_ops::unit(field, ambient, i)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the echelon basis (read off at the pivots),
    /// or `None` when `v` is not in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "subspace ambient mismatch");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.combine(&c);
        (back == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut acc = vec_ops::zeros(self.field, self.ambient);
        for (i, c) in coeffs.iter().enumerate() {
            vec_ops::axpy(&mut acc, c, self.basis.row(i));
        }
        acc
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        (0..o.dim()).all(|i| self.contains(o.vector(i)))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        Subspace::span(self.field, self.ambient, self.vectors().into_iter().chain(o.vectors()))
    }
}

/// `ambient / relations`, with coordinates given by the non-pivot columns of
/// the reduced relation basis. The section sends quotient basis vector `i`
/// to the ambient unit vector at the `i`-th non-pivot column.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: Field,
    ambient: usize,
    free: Vec<usize>,
    free_index: Vec<Option<usize>>,
    // for each relation row: pivot column and (quotient index, entry) pairs
    reducers: Vec<(usize, Vec<(usize, Scalar)>)>,
    reducer_at: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let rows = (0..relations.dim())
            .map(|k| {
                let v = relations.vector(k);
                v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
            })
            .collect();
        Self::from_rref_rows(relations.field, relations.ambient, rows)
    }

    fn from_rref_rows(field: Field, ambient: usize, rows: Vec<SparseRow>) -> Self {
        let mut is_pivot = vec![false; ambient];
        for r in &rows {
            is_pivot[r[0].0] = true;
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
        let mut free_index = vec![None; ambient];
        for (i, &c) in free.iter().enumerate() {
            free_index[c] = Some(i);
        }
        let mut reducer_at = vec![None; ambient];
        let reducers = rows
            .into_iter()
            .enumerate()
            .map(|(k, r)| {
                let p = r[0].0;
                reducer_at[p] = Some(k);
                let entries = r[1..].iter().map(|(c, x)| (free_index[*c].expect("reduced row"), -x)).collect();
                (p, entries)
            })
            .collect();
        QuotientSpace { field, ambient, free, free_index, reducers, reducer_at }
    }

    /// Quotient of `field^ambient` by the span of the given relation vectors.
    pub fn from_relations<I: IntoIterator<Item = Vec<Scalar>>>(field: Field, ambient: usize, rels: I) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in rels {
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    pub fn from_echelon(e: Echelon) -> Self {
        let (field, ambient) = (e.field, e.ncols);
        Self::from_rref_rows(field, ambient, e.into_sparse_rref())
    }

    /// Whether both quotients divide the same ambient space by the same
    /// relations.
    pub fn same_relations(&self, o: &QuotientSpace) -> bool {
        self.ambient == o.ambient && self.free == o.free && self.reducers == o.reducers
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Ambient index represented by quotient basis vector `i`.
    pub fn section_index(&self, i: usize) -> usize {
        self.free[i]
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "quotient ambient mismatch");
        let mut q: Vec<Scalar> = self.free.iter().map(|&c| v[c].clone()).collect();
        for (p, entries) in &self.reducers {
            let x = &v[*p];
            if x.is_zero() {
                continue;
            }
            for (i, c) in entries {
                q[*i].add_mul(x, c);
            }
        }
        q
    }

    /// Projection of a single ambient basis vector.
    pub fn project_unit(&self, c: usize) -> Vec<Scalar> {
        let mut q = vec_ops::zeros(self.field, self.dim());
        if let Some(i) = self.free_index[c] {
            q[i] = self.field.one();
            return q;
        }
        let (_, entries) = &self.reducers[self.reducer_at[c].expect("pivot column without reducer")];
        for (i, x) in entries {
            q[*i] = x.clone();
        }
        q
    }

    pub fn section(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim());
        let mut v = vec_ops::zeros(self.field, self.ambient);
        for (i, x) in q.iter().enumerate() {
            v[self.free[i]] = x.clone();
        }
        v
    }

    pub fn projection_matrix(&self) -> Matrix {
        Matrix::from_cols(self.field, self.dim(), (0..self.ambient).map(|c| self.project_unit(c)).collect())
    }

    pub fn section_matrix(&self) -> Matrix {
        Matrix::from_cols(self.field, self.ambient, (0..self.dim()).map(|i| {
            vec_ops::unit(self.field, self.ambient, self.free[i])
        }).collect())
    }

    pub fn is_zero(&self, v: &[Scalar]) -> bool {
        vec_ops::is_zero(&self.project(v))
    }

    /// Matrix on quotient coordinates of a linear map given on ambient
    /// vectors; the caller guarantees the map preserves the relations.
    pub fn induced_map<F: Fn(usize) -> Vec<Scalar>>(&self, image_of_ambient_unit: F) -> Matrix {
        Matrix::from_cols(
            self.field,
            self.dim(),
            (0..self.dim()).map(|i| self.project(&image_of_ambient_unit(self.free[i]))).collect(),
        )
    }
}

/// Quotient `V ⊗ W / ((P_k v) ⊗ w − v ⊗ (Q_k w))` realizing `V ⊗_R W` for a
/// right action on `V` and a left action on `W` given on generators
/// `(P_k, Q_k)`. Ambient index of `e_i ⊗ f_j` is `i * dim W + j`.
pub fn tensor_quotient(field: Field, dim_v: usize, right_ops: &[Matrix], dim_w: usize, left_ops: &[Matrix]) -> QuotientSpace {
    assert_eq!(right_ops.len(), left_ops.len(), "generator lists must pair up");
    let n = dim_v * dim_w;
    let mut e = Echelon::new(field, n);
    for (p, q) in right_ops.iter().zip(left_ops) {
        assert_eq!((p.rows(), p.cols()), (dim_v, dim_v));
        assert_eq!((q.rows(), q.cols()), (dim_w, dim_w));
        for i in 0..dim_v {
            for j in 0..dim_w {
                let mut rel: Vec<(usize, Scalar)> = Vec::new();
                for a in 0..dim_v {
                    let x = p.get(a, i);
                    if !x.is_zero() {
                        rel.push((a * dim_w + j, x.clone()));
                    }
                }
                for b in 0..dim_w {
                    let x = q.get(b, j);
                    if !x.is_zero() {
                        rel.push((i * dim_w + b, -x));
                    }
                }
                if !rel.is_empty() {
                    e.insert_sparse(&rel);
                }
            }
        }
    }
    QuotientSpace::from_echelon(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let (r, p) = rref(&m);
        assert_eq!(r, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 3);
        let b: Vec<Scalar> = [1, -2, 5].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(solve_linear(&id, &b).unwrap(), b);
        let z = Matrix::zeros(q(), 3, 3);
        assert!(solve_linear(&z, &b).is_none());
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(q(), 3)).dim(), 0);
        assert_eq!(nullspace(&Matrix::zeros(q(), 3, 3)).dim(), 3);
        let m = Matrix::from_i64(q(), &[&[1, 1, 0], &[0, 1, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.dim(), 1);
        assert!(vec_ops::is_zero(&m.mul_vec(ns.vector(0))));
    }

    #[test]
    fn rank_factor_examples() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(rank_factor(&id), (id.clone(), id.clone()));
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let (c, d) = rank_factor(&m);
        assert_eq!((c.rows(), c.cols(), d.rows(), d.cols()), (2, 1, 1, 2));
        assert_eq!(c.mul(&d), m);
    }

    #[test]
    fn quotient_projection_and_section() {
        // R^3 / span{(1,1,0)}
        let qs = QuotientSpace::from_relations(q(), 3, vec![vec![q().one(), q().one(), q().zero()]]);
        assert_eq!(qs.dim(), 2);
        let p = qs.projection_matrix();
        let s = qs.section_matrix();
        assert_eq!(p.mul(&s), Matrix::identity(q(), 2));
        assert!(qs.is_zero(&[q().one(), q().one(), q().zero()]));
        assert!(!qs.is_zero(&[q().one(), q().zero(), q().zero()]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[7, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert!(inverse(&Matrix::from_i64(q(), &[&[1, 2], &[2, 4]])).is_none());
    }
}
