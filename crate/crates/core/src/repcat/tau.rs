//! Auslander–Reiten translation for hereditary path algebras.
//!
//! `tau M` is the kernel of `nu P1 -> nu P0`, where `0 -> P1 -> P0 -> M -> 0`
//! is a minimal projective presentation and `nu` the Nakayama functor.
//! `tau^-1` goes through the opposite quiver.

use num_traits::Zero;

use super::linalg::{self, Mat};
use super::presentation::Presentation;
use super::rep::{Quiver, QuiverRep};
use crate::error::{Error, Result};

pub fn tau(quiver: &Quiver, m: &QuiverRep) -> Result<QuiverRep> {
    tau_with(quiver, &Presentation::compute(quiver, m))
}

pub fn tau_with(quiver: &Quiver, pres: &Presentation) -> Result<QuiverRep> {
    let n = quiver.n();
    let block_offsets = |u: usize, targets: &mut dyn Iterator<Item = usize>| -> (Vec<usize>, usize) {
        let mut offs = Vec::new();
        let mut total = 0;
        for t in targets {
            offs.push(total);
            total += quiver.paths(u, t).len();
        }
        (offs, total)
    };
    // at vertex u: ⊕_h I_{w_h} has basis (h, paths u -> w_h), ⊕_g I_{v_g} likewise
    let mut i1 = Vec::with_capacity(n);
    let mut kernel = Vec::with_capacity(n);
    for u in 0..n {
        let (off1, tot1) = block_offsets(u, &mut pres.relations.iter().map(|(w, _)| *w));
        let (off0, tot0) = block_offsets(u, &mut pres.gens.iter().map(|(v, _)| *v));
        let mut map = Mat::zeros(tot0, tot1);
        for h in 0..pres.relations.len() {
            for (g, p, c) in pres.relation_terms(quiver, h) {
                let v = pres.gens[g].0;
                for (ri, r) in quiver.paths(u, v).iter().enumerate() {
                    let s = quiver.concat(r, p);
                    let si = quiver.path_position(&s).expect("composite path is indexed");
                    let (row, col) = (off0[g] + ri, off1[h] + si);
                    let cur = map.get(row, col).clone();
                    map.set(row, col, cur + c);
                }
            }
        }
        kernel.push(if tot1 == 0 { Vec::new() } else { linalg::nullspace(&map) });
        i1.push((off1, tot1));
    }

    // restrict the arrows of ⊕ I_{w_h} to the kernel
    let dims: Vec<usize> = kernel.iter().map(Vec::len).collect();
    let mut maps = Vec::with_capacity(quiver.arrows().len());
    for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
        let mut big = Mat::zeros(i1[t].1, i1[s].1);
        for (h, (w, _)) in pres.relations.iter().enumerate() {
            let block = quiver.injective_arrow(*w, a, s, t);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    big.set(i1[t].0[h] + r, i1[s].0[h] + c, block.get(r, c).clone());
                }
            }
        }
        let target = Mat::from_cols(i1[t].1, &kernel[t]);
        let mut m_a = Mat::zeros(dims[t], dims[s]);
        for (c, v) in kernel[s].iter().enumerate() {
            let image = big.apply(v);
            let coords = if dims[t] == 0 {
                image.iter().all(Zero::is_zero).then(Vec::new)
            } else {
                linalg::solve(&target, &image)
            };
            let coords = coords.ok_or_else(|| Error::Invariant("translate is not closed under arrows".into()))?;
            for (r, x) in coords.into_iter().enumerate() {
                m_a.set(r, c, x);
            }
        }
        maps.push(m_a);
    }
    QuiverRep::new(quiver, dims, maps)
}

/// `tau^-1 = D tau_{Q^op} D`.
pub fn tau_inverse(quiver: &Quiver, m: &QuiverRep) -> Result<QuiverRep> {
    let op = quiver.opposite();
    Ok(tau(&op, &m.dual())?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::rep::{ext1_dim, hom_dim_intertwiner};

    fn iso(q: &Quiver, x: &QuiverRep, y: &QuiverRep) -> bool {
        // enough for the indecomposables compared here: equal dims plus
        // hom in both directions as large as End
        let e = hom_dim_intertwiner(q, x, x);
        x.dims == y.dims && hom_dim_intertwiner(q, x, y) == e && hom_dim_intertwiner(q, y, x) == e
    }

    #[test]
    fn a2_simple_translate() {
        let q = Quiver::from_arrows(2, vec![(0, 1)]);
        let t = tau(&q, &q.simple(0)).unwrap();
        assert_eq!(t.dims, vec![0, 1]);
        assert!(tau(&q, &q.projective(0)).unwrap().is_zero());
        assert!(tau(&q, &q.projective(1)).unwrap().is_zero());
        assert_eq!(tau_inverse(&q, &q.simple(1)).unwrap().dims, vec![1, 0]);
        assert!(tau_inverse(&q, &q.injective(0)).unwrap().is_zero());
    }

    #[test]
    fn affine_regular_pair() {
        let q = Quiver::from_arrows(3, vec![(0, 1), (0, 2), (1, 2)]);
        let s2 = q.simple(1);
        let m = q.thin(&[0, 2]);
        assert!(iso(&q, &tau(&q, &s2).unwrap(), &m));
        assert!(iso(&q, &tau(&q, &m).unwrap(), &s2));
        assert!(iso(&q, &tau_inverse(&q, &m).unwrap(), &s2));
    }

    #[test]
    fn translate_round_trip_and_ar_formula() {
        for q in [
            Quiver::from_arrows(3, vec![(0, 1), (0, 2), (1, 2)]),
            Quiver::from_arrows(3, vec![(0, 1), (2, 1)]),
            Quiver::from_arrows(4, vec![(0, 1), (1, 2), (3, 1)]),
            Quiver::from_arrows(2, vec![(0, 1), (0, 1)]),
        ] {
            for i in 0..q.n() {
                let mut x = q.injective(i);
                for _ in 0..3 {
                    let tx = tau(&q, &x).unwrap();
                    if tx.is_zero() {
                        break;
                    }
                    assert!(iso(&q, &tau_inverse(&q, &tx).unwrap(), &x));
                    // Ext^1(X, Y) = D Hom(Y, tau X)
                    for j in 0..q.n() {
                        for y in [q.simple(j), q.projective(j), q.injective(j)] {
                            assert_eq!(ext1_dim(&q, &x, &y).unwrap(), hom_dim_intertwiner(&q, &y, &tx));
                        }
                    }
                    x = tx;
                }
            }
        }
    }

    #[test]
    fn presentation_hom_matches_intertwiners() {
        let q = Quiver::from_arrows(3, vec![(0, 1), (0, 2), (1, 2)]);
        let mut objs = Vec::new();
        for i in 0..3 {
            objs.push(q.projective(i));
            objs.push(q.injective(i));
            objs.push(q.simple(i));
        }
        objs.push(q.thin(&[0, 2]));
        objs.push(tau_inverse(&q, &q.projective(0)).unwrap());
        objs.push(tau(&q, &q.injective(2)).unwrap());
        for x in &objs {
            let pres = Presentation::compute(&q, x);
            for y in &objs {
                assert_eq!(pres.hom_into(&q, y), hom_dim_intertwiner(&q, x, y));
            }
        }
    }
}
