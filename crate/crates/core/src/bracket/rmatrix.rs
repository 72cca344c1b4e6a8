use super::Bracket;
use crate::ring::Ring;

/// Dense row-major matrix over a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[E]>::to_vec)
            .collect()
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        let data = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
            .collect();
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![ring.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut data[i * other.cols + j];
                    *cell = ring.add(cell, &ring.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn kron<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.get(i / other.rows, j / other.cols);
                data.push(ring.mul(a, other.get(i % other.rows, j % other.cols)));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn format<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        self.to_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| ring.format(e))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The colored R-matrices `X_{x,y}` with the cap `N` and cup `U`.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrices<E> {
    pub size: usize,
    pub x: Vec<Matrix<E>>,
    pub identity: Matrix<E>,
    pub u: Matrix<E>,
    pub n: Matrix<E>,
}

impl<E> RMatrices<E> {
    /// `X_{x,y}`, 0-indexed.
    pub fn get(&self, x: usize, y: usize) -> &Matrix<E> {
        &self.x[x * self.size + y]
    }
}

impl<R: Ring> Bracket<R> {
    pub fn to_rmatrices(&self) -> RMatrices<R::Elem> {
        let r = &self.ring;
        let n = self.size();
        let z = r.zero();
        let x = (0..n * n)
            .map(|i| {
                let (a, b) = (&self.a[i], &self.b[i]);
                let corner = r.sub(a, &r.mul(&self.a_inv[i], &r.mul(b, b)));
                Matrix::from_rows(vec![
                    vec![a.clone(), z.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), b.clone(), z.clone()],
                    vec![z.clone(), b.clone(), corner, z.clone()],
                    vec![z.clone(), z.clone(), z.clone(), a.clone()],
                ])
            })
            .collect();
        let u = Matrix::from_rows(vec![
            vec![z.clone()],
            vec![r.neg(&self.b_inv[0])],
            vec![self.a_inv[0].clone()],
            vec![z.clone()],
        ]);
        let nn = Matrix::from_rows(vec![vec![
            z.clone(),
            self.a[0].clone(),
            r.neg(&self.b[0]),
            z,
        ]]);
        RMatrices {
            size: n,
            x,
            identity: Matrix::identity(r, 2),
            u,
            n: nn,
        }
    }
}

/// Whether `M` satisfies the uncolored braid relation on `V⊗V⊗V`.
pub fn is_classical_rmatrix<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> bool {
    if m.rows != m.cols || m.rows == 0 {
        return false;
    }
    let d = (m.rows as f64).sqrt().round() as usize;
    if d * d != m.rows {
        return false;
    }
    let id = Matrix::identity(ring, d);
    let left = m.kron(ring, &id);
    let right = id.kron(ring, m);
    left.mul(ring, &right).mul(ring, &left) == right.mul(ring, &left).mul(ring, &right)
}
