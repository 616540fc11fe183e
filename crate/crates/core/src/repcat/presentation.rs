//! Minimal projective presentations `0 -> ⊕ P_{w_h} -> ⊕ P_{v_g} -> M -> 0`.
//!
//! Over a path algebra the kernel of a projective cover is projective, so the
//! presentation is also a resolution.  It gives a cheap route to `Hom(M, -)`
//! and is the starting point of the translate.

use num_traits::Zero;

use super::linalg::{self, Mat, Q};
use super::rep::{Path, Quiver, QuiverRep};

#[derive(Clone, Debug)]
pub struct Presentation {
    /// Top generators `(vertex, vector in M_vertex)`.
    pub gens: Vec<(usize, Vec<Q>)>,
    /// Relations `(vertex w, coefficients)`: the coefficient of `(g, p)` sits at
    /// `offset(w, g) + position of p in paths(v_g, w)`.
    pub relations: Vec<(usize, Vec<Q>)>,
    offsets: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn compute(quiver: &Quiver, m: &QuiverRep) -> Self {
        let n = quiver.n();
        let std_m: Vec<_> = (0..n).map(|w| standard_basis(m.dims[w])).collect();
        let rad_m = arrow_images(quiver, &std_m, |a, v| m.maps[a].apply(v));
        let gens = top_generators(&rad_m, &std_m, &m.dims);

        let mut offsets = vec![Vec::with_capacity(gens.len()); n];
        let mut totals = vec![0usize; n];
        for (w, off) in offsets.iter_mut().enumerate() {
            for (v, _) in &gens {
                off.push(totals[w]);
                totals[w] += quiver.paths(*v, w).len();
            }
        }
        let p0_arrow = |a: usize, x: &[Q]| -> Vec<Q> {
            let (s, t) = quiver.arrows()[a];
            let mut y = vec![Q::zero(); totals[t]];
            for (g, (v, _)) in gens.iter().enumerate() {
                for (i, p) in quiver.paths(*v, s).iter().enumerate() {
                    let c = &x[offsets[s][g] + i];
                    if c.is_zero() {
                        continue;
                    }
                    let mut ext = p.clone();
                    ext.arrows.push(a);
                    let j = quiver.path_position(&ext).expect("extended path is indexed");
                    y[offsets[t][g] + j] += c;
                }
            }
            y
        };

        // kernel of the projective cover, vertex by vertex
        let mut kernel = Vec::with_capacity(n);
        for w in 0..n {
            if totals[w] == 0 {
                kernel.push(Vec::new());
                continue;
            }
            let mut cols = Vec::with_capacity(totals[w]);
            for (v, g) in &gens {
                for p in quiver.paths(*v, w) {
                    cols.push(m.path_map(p).apply(g));
                }
            }
            kernel.push(linalg::nullspace(&Mat::from_cols(m.dims[w], &cols)));
        }
        let rad_k = arrow_images(quiver, &kernel, p0_arrow);
        let relations = top_generators(&rad_k, &kernel, &totals);
        Self { gens, relations, offsets }
    }

    /// Nonzero coefficients `(g, path)` of relation `h`.
    pub fn relation_terms<'a>(
        &'a self,
        quiver: &'a Quiver,
        h: usize,
    ) -> impl Iterator<Item = (usize, &'a Path, &'a Q)> + 'a {
        let (w, coeffs) = &self.relations[h];
        self.gens.iter().enumerate().flat_map(move |(g, (v, _))| {
            let off = self.offsets[*w][g];
            quiver.paths(*v, *w).iter().enumerate().filter_map(move |(i, p)| {
                let c = &coeffs[off + i];
                (!c.is_zero()).then_some((g, p, c))
            })
        })
    }

    /// `dim Hom(M, Y)`: tuples `(y_g in Y_{v_g})` killed by every relation.
    pub fn hom_into(&self, quiver: &Quiver, y: &QuiverRep) -> usize {
        let mut col_off = Vec::with_capacity(self.gens.len());
        let mut cols = 0;
        for (v, _) in &self.gens {
            col_off.push(cols);
            cols += y.dims[*v];
        }
        if cols == 0 {
            return 0;
        }
        let mut row_off = Vec::with_capacity(self.relations.len());
        let mut rows = 0;
        for (w, _) in &self.relations {
            row_off.push(rows);
            rows += y.dims[*w];
        }
        let mut sys = Mat::zeros(rows, cols);
        for h in 0..self.relations.len() {
            for (g, p, c) in self.relation_terms(quiver, h) {
                let yp = y.path_map(p);
                for r in 0..yp.rows() {
                    for k in 0..yp.cols() {
                        let e = yp.get(r, k);
                        if e.is_zero() {
                            continue;
                        }
                        let (rr, cc) = (row_off[h] + r, col_off[g] + k);
                        let cur = sys.get(rr, cc).clone();
                        sys.set(rr, cc, cur + e * c);
                    }
                }
            }
        }
        cols - linalg::rank(&sys)
    }
}

fn standard_basis(d: usize) -> Vec<Vec<Q>> {
    (0..d)
        .map(|i| {
            let mut v = vec![Q::zero(); d];
            v[i] = linalg::q(1);
            v
        })
        .collect()
}

/// Per vertex `w`, the images under every arrow `s -> w` of `basis[s]`.
fn arrow_images(quiver: &Quiver, basis: &[Vec<Vec<Q>>], map: impl Fn(usize, &[Q]) -> Vec<Q>) -> Vec<Vec<Vec<Q>>> {
    let mut out = vec![Vec::new(); quiver.n()];
    for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
        for v in &basis[s] {
            out[t].push(map(a, v));
        }
    }
    out
}

/// A complement of the radical at each vertex, chosen from `space`.
fn top_generators(radical: &[Vec<Vec<Q>>], space: &[Vec<Vec<Q>>], dims: &[usize]) -> Vec<(usize, Vec<Q>)> {
    let mut gens = Vec::new();
    for w in 0..dims.len() {
        let mut all = radical[w].clone();
        let start = all.len();
        all.extend(space[w].iter().cloned());
        for idx in linalg::independent_subset(&all, dims[w]) {
            if idx >= start {
                gens.push((w, all[idx].clone()));
            }
        }
    }
    gens
}
