//! Quivers with explicit arrows and paths, and their representations over Q.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::linalg::{self, Mat, Q};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::exmatrix::ExchangeMatrix;

/// A path: a start vertex plus a sequence of composable arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub arrows: Vec<usize>,
}

/// Acyclic quiver with one entry per arrow (multiple arrows listed separately).
#[derive(Clone, Debug)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    /// `paths[u][v]`: all paths from `u` to `v`, trivial path first when `u == v`.
    paths: Vec<Vec<Vec<Path>>>,
    path_index: HashMap<Path, usize>,
}

impl Quiver {
    pub fn from_matrix(b: &ExchangeMatrix) -> Result<Self> {
        if !b.is_acyclic() {
            return Err(Error::Unsupported(format!("quiver {b} has an oriented cycle")));
        }
        let mut arrows = Vec::new();
        for (i, j, m) in b.arrows() {
            for _ in 0..m {
                arrows.push((i, j));
            }
        }
        Ok(Self::from_arrows(b.n(), arrows))
    }

    pub fn from_arrows(n: usize, arrows: Vec<(usize, usize)>) -> Self {
        let mut paths = vec![vec![Vec::new(); n]; n];
        for (u, row) in paths.iter_mut().enumerate() {
            // depth-first extension from the trivial path at u
            let mut stack = vec![Path { src: u, arrows: Vec::new() }];
            while let Some(p) = stack.pop() {
                let end = p.arrows.last().map_or(u, |&a| arrows[a].1);
                for (a, &(s, _)) in arrows.iter().enumerate() {
                    if s == end {
                        let mut ext = p.arrows.clone();
                        ext.push(a);
                        stack.push(Path { src: u, arrows: ext });
                    }
                }
                row[end].push(p);
            }
            for list in row.iter_mut() {
                list.sort_by(|a, b| a.arrows.len().cmp(&b.arrows.len()).then_with(|| a.arrows.cmp(&b.arrows)));
            }
        }
        let mut path_index = HashMap::new();
        for row in &paths {
            for list in row {
                for (i, p) in list.iter().enumerate() {
                    path_index.insert(p.clone(), i);
                }
            }
        }
        Self { n, arrows, paths, path_index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn paths(&self, from: usize, to: usize) -> &[Path] {
        &self.paths[from][to]
    }

    pub fn path_target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.src, |&a| self.arrows[a].1)
    }

    /// Position of `p` inside `paths(p.src, target(p))`.
    pub fn path_position(&self, p: &Path) -> Option<usize> {
        self.path_index.get(p).copied()
    }

    /// `first` followed by `second`.
    pub fn concat(&self, first: &Path, second: &Path) -> Path {
        debug_assert_eq!(self.path_target(first), second.src);
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&second.arrows);
        Path { src: first.src, arrows }
    }

    pub fn opposite(&self) -> Quiver {
        Quiver::from_arrows(self.n, self.arrows.iter().map(|&(s, t)| (t, s)).collect())
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, &(_, t))| t == v).map(|(a, _)| a)
    }

    /// Euler form `<d, e> = sum d_i e_i - sum_{a: i -> j} d_i e_j`.
    pub fn euler(&self, d: &[i64], e: &[i64]) -> i64 {
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| d[s] * e[t]).sum();
        diag - off
    }

    /// The matrix `E` with `<d, e> = d^T E e`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let mut e = vec![vec![0i64; self.n]; self.n];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            e[s][t] -= 1;
        }
        e
    }

    pub fn projective(&self, i: usize) -> QuiverRep {
        let dims: Vec<usize> = (0..self.n).map(|v| self.paths[i][v].len()).collect();
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = Mat::zeros(dims[t], dims[s]);
                for (col, p) in self.paths[i][s].iter().enumerate() {
                    let mut ext = p.clone();
                    ext.arrows.push(a);
                    let row = self.path_index[&ext];
                    m.set(row, col, Q::one());
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// `I_j`: at vertex `v` the dual of the paths `v -> j`.
    pub fn injective(&self, j: usize) -> QuiverRep {
        let dims: Vec<usize> = (0..self.n).map(|v| self.paths[v][j].len()).collect();
        let maps = self.arrows.iter().enumerate().map(|(a, &(s, t))| self.injective_arrow(j, a, s, t)).collect();
        QuiverRep { dims, maps }
    }

    /// Arrow `a: s -> t` acting on `I_j`: the dual basis element of a path
    /// `p: s -> j` goes to that of `q: t -> j` exactly when `p = a q`.
    pub(crate) fn injective_arrow(&self, j: usize, a: usize, s: usize, t: usize) -> Mat {
        let mut m = Mat::zeros(self.paths[t][j].len(), self.paths[s][j].len());
        for (row, qpath) in self.paths[t][j].iter().enumerate() {
            let mut arrows = vec![a];
            arrows.extend_from_slice(&qpath.arrows);
            let p = Path { src: s, arrows };
            let col = self.path_index[&p];
            m.set(row, col, Q::one());
        }
        m
    }

    pub fn simple(&self, i: usize) -> QuiverRep {
        let mut dims = vec![0; self.n];
        dims[i] = 1;
        QuiverRep::zero_maps(self, dims)
    }

    /// The module with dimension 1 on `support` and identity maps on every
    /// arrow inside it.
    pub fn thin(&self, support: &[usize]) -> QuiverRep {
        let mut dims = vec![0; self.n];
        for &v in support {
            dims[v] = 1;
        }
        let maps = self
            .arrows
            .iter()
            .map(|&(s, t)| {
                let mut m = Mat::zeros(dims[t], dims[s]);
                if dims[s] == 1 && dims[t] == 1 {
                    m.set(0, 0, Q::one());
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    /// One matrix per arrow, shape `dims[target] x dims[source]`.
    pub maps: Vec<Mat>,
}

impl QuiverRep {
    pub fn zero_maps(quiver: &Quiver, dims: Vec<usize>) -> Self {
        let maps = quiver.arrows().iter().map(|&(s, t)| Mat::zeros(dims[t], dims[s])).collect();
        Self { dims, maps }
    }

    pub fn new(quiver: &Quiver, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Arity(maps.len(), quiver.arrows().len()));
        }
        for (m, &(s, t)) in maps.iter().zip(quiver.arrows()) {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::Invariant(format!(
                    "arrow {s}->{t} needs a {}x{} matrix, got {}x{}",
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { dims, maps })
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Composite linear map along a path.
    pub fn path_map(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.dims[p.src]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Vector-space dual, a representation of the opposite quiver.
    pub fn dual(&self) -> QuiverRep {
        QuiverRep { dims: self.dims.clone(), maps: self.maps.iter().map(Mat::transpose).collect() }
    }
}

/// Dimension of `Hom(X, Y)`, read off a projective presentation of `X`.
pub fn hom_dim(quiver: &Quiver, x: &QuiverRep, y: &QuiverRep) -> usize {
    Presentation::compute(quiver, x).hom_into(quiver, y)
}

/// Dimension of `Hom(X, Y)` as solutions of `phi_t X_a = Y_a phi_s` for all
/// arrows.  Slower, but independent of the presentation machinery.
pub fn hom_dim_intertwiner(quiver: &Quiver, x: &QuiverRep, y: &QuiverRep) -> usize {
    let n = quiver.n();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offset[n];
    if unknowns == 0 {
        return 0;
    }
    // phi_v stored row-major: entry (r, c) at offset[v] + r * x.dims[v] + c
    let var = |v: usize, r: usize, c: usize| offset[v] + r * x.dims[v] + c;
    let mut rows: Vec<Vec<(usize, Q)>> = Vec::new();
    for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
        let xa = &x.maps[a];
        let ya = &y.maps[a];
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                let mut eq: Vec<(usize, Q)> = Vec::new();
                for l in 0..x.dims[t] {
                    let coef = xa.get(l, c);
                    if !coef.is_zero() {
                        eq.push((var(t, r, l), coef.clone()));
                    }
                }
                for l in 0..y.dims[s] {
                    let coef = ya.get(r, l);
                    if !coef.is_zero() {
                        eq.push((var(s, l, c), -coef.clone()));
                    }
                }
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    unknowns - sparse_rank(rows, unknowns)
}

/// Rank of a sparse system given as rows of `(column, value)` pairs.
fn sparse_rank(rows: Vec<Vec<(usize, Q)>>, cols: usize) -> usize {
    // Dense fallback keeps things simple; systems here are small.
    let mut m = Mat::zeros(rows.len(), cols);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            let cur = m.get(r, c).clone();
            m.set(r, c, cur + v);
        }
    }
    linalg::rank(&m)
}

pub fn euler_pairing(quiver: &Quiver, x: &QuiverRep, y: &QuiverRep) -> i64 {
    quiver.euler(&x.dim_vector(), &y.dim_vector())
}

/// `dim Ext^1(X, Y) = dim Hom(X, Y) - <dim X, dim Y>`.
pub fn ext1_dim(quiver: &Quiver, x: &QuiverRep, y: &QuiverRep) -> Result<usize> {
    let hom = hom_dim(quiver, x, y) as i64;
    let ext = hom - euler_pairing(quiver, x, y);
    if ext < 0 {
        return Err(Error::Invariant(format!("negative Ext^1 ({ext}) from Hom {hom}")));
    }
    Ok(ext as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_arrows(2, vec![(0, 1)])
    }

    fn a2tilde() -> Quiver {
        Quiver::from_arrows(3, vec![(0, 1), (0, 2), (1, 2)])
    }

    #[test]
    fn paths_and_projectives() {
        let q = a2tilde();
        assert_eq!(q.paths(0, 2).len(), 2);
        assert_eq!(q.projective(0).dims, vec![1, 1, 2]);
        assert_eq!(q.injective(2).dims, vec![2, 1, 1]);
        assert_eq!(q.projective(2).dims, vec![0, 0, 1]);
    }

    #[test]
    fn hom_examples() {
        let q = a2();
        let p1 = q.projective(0);
        assert_eq!(hom_dim(&q, &p1, &p1), 1);
        let t = a2tilde();
        let s2 = t.simple(1);
        let m = t.thin(&[0, 2]);
        assert_eq!(hom_dim(&t, &s2, &m), 0);
        assert_eq!(ext1_dim(&t, &s2, &m).unwrap(), 1);
        assert_eq!(ext1_dim(&t, &s2, &s2).unwrap(), 0);
        for i in 0..3 {
            let p = t.projective(i);
            for y in [&s2, &m, &t.injective(0), &t.projective(0)] {
                assert_eq!(hom_dim(&t, &p, y), y.dims[i]);
                assert_eq!(ext1_dim(&t, &p, y).unwrap(), 0);
            }
        }
    }

    #[test]
    fn euler_matrix_agrees_with_form() {
        let t = a2tilde();
        let e = t.euler_matrix();
        let d = [1, 0, 1];
        let f = [0, 1, 0];
        let via_matrix: i64 = (0..3).map(|i| (0..3).map(|j| d[i] * e[i][j] * f[j]).sum::<i64>()).sum();
        assert_eq!(via_matrix, t.euler(&d, &f));
        // Hom vanishes both ways and each Ext^1 is one-dimensional
        assert_eq!(t.euler(&f, &d), -1);
        assert_eq!(t.euler(&d, &f), -1);
        // the null root is radical for the symmetrised form
        let delta = [1, 1, 1];
        assert_eq!(t.euler(&delta, &delta), 0);
    }

    #[test]
    fn shape_validation() {
        let q = a2();
        assert!(QuiverRep::new(&q, vec![1, 1], vec![Mat::zeros(1, 1)]).is_ok());
        assert!(QuiverRep::new(&q, vec![1, 2], vec![Mat::zeros(1, 1)]).is_err());
        assert!(QuiverRep::new(&q, vec![1, 1], vec![]).is_err());
    }
}
