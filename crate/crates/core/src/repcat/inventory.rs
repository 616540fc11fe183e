//! Exceptional objects of the cluster category, with their AR coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use super::category::{ext_from, CatObject, Category, View};
use super::presentation::Presentation;
use super::rep::{Quiver, QuiverRep};
use super::tau::{tau_inverse, tau_with};
use crate::error::{Error, Result};
use crate::exmatrix::{ExchangeMatrix, QuiverClass};
use crate::laurent::DenomVector;

/// Where an indecomposable sits in the AR quiver.  Vertices are 0-based here
/// and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "component", rename_all = "snake_case")]
pub enum Coords {
    /// Dynkin: `tau^-step P_base`.
    FinitePosition {
        step: usize,
        base: usize,
    },
    /// `tau^-step P_base`.
    Preprojective {
        step: usize,
        base: usize,
    },
    /// `tau^step I_base`.
    Preinjective {
        step: usize,
        base: usize,
    },
    /// Quasisocle `E_socle` of tube `tube`, quasilength `ql`.
    Regular {
        tube: usize,
        socle: usize,
        ql: usize,
    },
    ShiftedProjective {
        vertex: usize,
    },
}

impl Coords {
    pub fn is_regular(&self) -> bool {
        matches!(self, Coords::Regular { .. })
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coords::FinitePosition { step, base } => write!(f, "finite(tau^-{step} P{})", base + 1),
            Coords::Preprojective { step, base } => write!(f, "preprojective(tau^-{step} P{})", base + 1),
            Coords::Preinjective { step, base } => write!(f, "preinjective(tau^{step} I{})", base + 1),
            Coords::Regular { tube, socle, ql } => write!(f, "regular(tube {tube}, socle E{socle}, ql {ql})"),
            Coords::ShiftedProjective { vertex } => write!(f, "P{}[1]", vertex + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ObjectKind {
    Module { rep: QuiverRep, dim: Vec<i64> },
    ShiftedProjective(usize),
}

#[derive(Clone, Debug)]
pub struct IndecObject {
    pub id: usize,
    pub kind: ObjectKind,
    pub coords: Coords,
}

impl IndecObject {
    pub fn is_module(&self) -> bool {
        matches!(self.kind, ObjectKind::Module { .. })
    }

    pub fn dim(&self) -> Option<&[i64]> {
        match &self.kind {
            ObjectKind::Module { dim, .. } => Some(dim),
            ObjectKind::ShiftedProjective(_) => None,
        }
    }

    pub fn rep(&self) -> Option<&QuiverRep> {
        match &self.kind {
            ObjectKind::Module { rep, .. } => Some(rep),
            ObjectKind::ShiftedProjective(_) => None,
        }
    }

    pub fn to_cat(&self) -> CatObject {
        match &self.kind {
            ObjectKind::Module { rep, .. } => CatObject::Module(rep.clone()),
            ObjectKind::ShiftedProjective(i) => CatObject::Shifted(*i),
        }
    }

    /// Short human label, e.g. `(1,0,1)` or `P2[1]`.
    pub fn label(&self) -> String {
        match &self.kind {
            ObjectKind::Module { dim, .. } => DenomVector(dim.clone()).to_string(),
            ObjectKind::ShiftedProjective(i) => format!("P{}[1]", i + 1),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Tube {
    pub rank: usize,
    /// Inventory ids of the quasisimples `E_0, ..., E_{rank-1}` with
    /// `E_k = tau^-k E_0`.
    pub quasisimples: Vec<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TubeAtlas {
    pub tubes: Vec<Tube>,
}

pub struct Inventory {
    matrix: ExchangeMatrix,
    class: QuiverClass,
    depth: usize,
    cat: Category,
    objects: Vec<IndecObject>,
    pres: Vec<Option<Presentation>>,
    tau_inv_rep: Vec<Option<QuiverRep>>,
    tau_id: Vec<Option<usize>>,
    tau_inv_id: Vec<Option<usize>>,
    by_dim: HashMap<Vec<i64>, usize>,
    shifted: Vec<usize>,
    atlas: TubeAtlas,
    memo: Mutex<HashMap<(usize, usize), usize>>,
}

/// Default transjective depth when none is requested.
pub const DEFAULT_INVENTORY_DEPTH: usize = 6;

impl Inventory {
    /// Builds the exceptional objects over the acyclic quiver `matrix`.
    /// Transjective components of infinite type are cut at `depth`.
    pub fn build(matrix: &ExchangeMatrix, depth: usize) -> Result<Self> {
        let class = matrix.classify();
        match class {
            QuiverClass::Dynkin { .. } | QuiverClass::AffineA { .. } | QuiverClass::Rank2 { .. } => {}
            _ => return Err(Error::Unsupported(format!("no exceptional inventory for {} quivers", class.name()))),
        }
        let quiver = Quiver::from_matrix(matrix)?;
        let n = quiver.n();
        let cat = Category::new(quiver);
        let q = cat.quiver();

        let mut modules: Vec<(QuiverRep, Coords)> = Vec::new();
        if class.is_dynkin() {
            for i in 0..n {
                let mut x = cat.projective(i).clone();
                let mut step = 0;
                while !x.is_zero() {
                    modules.push((x.clone(), Coords::FinitePosition { step, base: i }));
                    x = tau_inverse(q, &x)?;
                    step += 1;
                    if step > 4 * n * n + 4 {
                        return Err(Error::Invariant("Dynkin orbit did not terminate".into()));
                    }
                }
            }
        } else {
            for i in 0..n {
                let mut x = cat.projective(i).clone();
                for step in 0..=depth {
                    let next = (step < depth).then(|| tau_inverse(q, &x)).transpose()?;
                    modules.push((x, Coords::Preprojective { step, base: i }));
                    match next {
                        Some(nx) => x = nx,
                        None => break,
                    }
                }
                let mut x = cat.injective(i).clone();
                for step in 0..=depth {
                    let next = (step < depth).then(|| super::tau::tau(q, &x)).transpose()?;
                    modules.push((x, Coords::Preinjective { step, base: i }));
                    match next {
                        Some(nx) => x = nx,
                        None => break,
                    }
                }
            }
            if let QuiverClass::AffineA { .. } = class {
                for rep in cycle_arc_modules(q) {
                    // placeholder coordinates, fixed once the atlas exists
                    modules.push((rep, Coords::Regular { tube: usize::MAX, socle: 0, ql: 0 }));
                }
            }
        }

        let mut objects = Vec::new();
        let mut pres = Vec::new();
        let mut by_dim = HashMap::new();
        for (rep, coords) in modules {
            let dim = rep.dim_vector();
            let p = Presentation::compute(q, &rep);
            let end = p.hom_into(q, &rep);
            let self_ext = ext_from(q, &p, &rep, &rep)?;
            if end != 1 || self_ext != 0 {
                if coords.is_regular() {
                    continue;
                }
                return Err(Error::Invariant(format!(
                    "{} at {coords} is not exceptional (End {end}, Ext {self_ext})",
                    DenomVector(dim)
                )));
            }
            if let Some(&prev) = by_dim.get(&dim) {
                let prev: &IndecObject = &objects[prev];
                return Err(Error::Invariant(format!(
                    "dimension vector {} occurs twice ({} and {coords})",
                    DenomVector(dim),
                    prev.coords
                )));
            }
            let id = objects.len();
            by_dim.insert(dim.clone(), id);
            objects.push(IndecObject { id, kind: ObjectKind::Module { rep, dim }, coords });
            pres.push(Some(p));
        }
        let mut shifted = Vec::with_capacity(n);
        for i in 0..n {
            let id = objects.len();
            shifted.push(id);
            objects.push(IndecObject {
                id,
                kind: ObjectKind::ShiftedProjective(i),
                coords: Coords::ShiftedProjective { vertex: i },
            });
            pres.push(None);
        }

        let mut inv = Self {
            matrix: matrix.clone(),
            class,
            depth,
            cat,
            objects,
            pres,
            tau_inv_rep: Vec::new(),
            tau_id: Vec::new(),
            tau_inv_id: Vec::new(),
            by_dim,
            shifted,
            atlas: TubeAtlas::default(),
            memo: Mutex::new(HashMap::new()),
        };
        inv.link_translates()?;
        inv.build_atlas()?;
        Ok(inv)
    }

    fn link_translates(&mut self) -> Result<()> {
        let q = self.cat.quiver();
        let count = self.objects.len();
        let mut tau_id = vec![None; count];
        let mut tau_inv_id = vec![None; count];
        let mut tau_inv_rep = vec![None; count];
        for obj in &self.objects {
            match &obj.kind {
                ObjectKind::ShiftedProjective(i) => {
                    tau_id[obj.id] = self.by_dim.get(&self.cat.injective(*i).dim_vector()).copied();
                    tau_inv_id[obj.id] = self.by_dim.get(&self.cat.projective(*i).dim_vector()).copied();
                }
                ObjectKind::Module { rep, .. } => {
                    let pres = self.pres[obj.id].as_ref().expect("modules carry presentations");
                    tau_id[obj.id] = if pres.relations.is_empty() {
                        Some(self.shifted[pres.gens[0].0])
                    } else {
                        self.by_dim.get(&tau_with(q, pres)?.dim_vector()).copied()
                    };
                    let t = tau_inverse(q, rep)?;
                    if t.is_zero() {
                        let v = self
                            .cat
                            .injective_vertex(rep)
                            .ok_or_else(|| Error::Invariant("injective object without vertex".into()))?;
                        tau_inv_id[obj.id] = Some(self.shifted[v]);
                    } else {
                        tau_inv_id[obj.id] = self.by_dim.get(&t.dim_vector()).copied();
                        tau_inv_rep[obj.id] = Some(t);
                    }
                }
            }
        }
        self.tau_id = tau_id;
        self.tau_inv_id = tau_inv_id;
        self.tau_inv_rep = tau_inv_rep;
        Ok(())
    }

    fn build_atlas(&mut self) -> Result<()> {
        let regular: Vec<usize> = self.objects.iter().filter(|o| o.coords.is_regular()).map(|o| o.id).collect();
        if regular.is_empty() {
            return Ok(());
        }
        // tau-orbits; each must stay inside the regular set
        let mut orbit_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut seen = vec![false; self.objects.len()];
        for &r in &regular {
            if seen[r] {
                continue;
            }
            let mut orbit = vec![r];
            seen[r] = true;
            let mut cur = r;
            loop {
                let next = self.tau_inv_id[cur].filter(|&x| self.objects[x].coords.is_regular()).ok_or_else(|| {
                    Error::Invariant(format!("regular {} leaves its tube", self.objects[cur].label()))
                })?;
                if next == r {
                    break;
                }
                seen[next] = true;
                orbit.push(next);
                cur = next;
            }
            orbit_of.insert(r, orbit);
        }
        let n = self.cat.quiver().n();
        let mut ql = HashMap::new();
        for orbit in orbit_of.values() {
            let mut sum = vec![0i64; n];
            for &x in orbit {
                for (s, d) in sum.iter_mut().zip(self.objects[x].dim().unwrap()) {
                    *s += d;
                }
            }
            // each orbit adds up to ql copies of the null root (all ones here)
            if sum.iter().any(|&s| s != sum[0]) {
                return Err(Error::Invariant(format!(
                    "orbit sum {} is not a multiple of the null root",
                    DenomVector(sum)
                )));
            }
            for &x in orbit {
                ql.insert(x, sum[0] as usize);
            }
        }
        let mut tubes: Vec<Tube> = orbit_of
            .values()
            .filter(|o| ql[&o[0]] == 1)
            .map(|orbit| {
                let start = *orbit.iter().min_by_key(|&&x| self.objects[x].dim().unwrap().to_vec()).unwrap();
                let pos = orbit.iter().position(|&x| x == start).unwrap();
                let quasisimples = (0..orbit.len()).map(|k| orbit[(pos + k) % orbit.len()]).collect();
                Tube { rank: orbit.len(), quasisimples }
            })
            .collect();
        tubes.sort_by_key(|t| (t.rank, self.objects[t.quasisimples[0]].dim().unwrap().to_vec()));

        let q = self.cat.quiver();
        for &r in &regular {
            let x = self.objects[r].rep().unwrap();
            let mut found = None;
            for (ti, tube) in tubes.iter().enumerate() {
                for (k, &e) in tube.quasisimples.iter().enumerate() {
                    let pe = self.pres[e].as_ref().unwrap();
                    if pe.hom_into(q, x) != 0 {
                        if found.is_some() {
                            return Err(Error::Invariant(format!("{} has two quasisocles", self.objects[r].label())));
                        }
                        found = Some((ti, k));
                    }
                }
            }
            let (tube, socle) =
                found.ok_or_else(|| Error::Invariant(format!("{} has no quasisocle", self.objects[r].label())))?;
            let l = ql[&r];
            if l == 0 || l >= tubes[tube].rank {
                return Err(Error::Invariant(format!(
                    "exceptional regular with quasilength {l} in rank {}",
                    tubes[tube].rank
                )));
            }
            self.objects[r].coords = Coords::Regular { tube, socle, ql: l };
        }
        self.atlas = TubeAtlas { tubes };
        Ok(())
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn class(&self) -> &QuiverClass {
        &self.class
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn category(&self) -> &Category {
        &self.cat
    }

    pub fn quiver(&self) -> &Quiver {
        self.cat.quiver()
    }

    pub fn n(&self) -> usize {
        self.cat.quiver().n()
    }

    pub fn objects(&self) -> &[IndecObject] {
        &self.objects
    }

    pub fn get(&self, id: usize) -> &IndecObject {
        &self.objects[id]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn modules(&self) -> impl Iterator<Item = &IndecObject> {
        self.objects.iter().filter(|o| o.is_module())
    }

    pub fn atlas(&self) -> &TubeAtlas {
        &self.atlas
    }

    pub fn shifted(&self, i: usize) -> usize {
        self.shifted[i]
    }

    pub fn by_dim(&self, dim: &[i64]) -> Option<usize> {
        self.by_dim.get(dim).copied()
    }

    pub fn projective(&self, i: usize) -> usize {
        self.by_dim[&self.cat.projective(i).dim_vector()]
    }

    /// `tau` inside the inventory; `None` if it falls beyond the depth cut.
    pub fn tau(&self, id: usize) -> Option<usize> {
        self.tau_id[id]
    }

    pub fn tau_inv(&self, id: usize) -> Option<usize> {
        self.tau_inv_id[id]
    }

    pub fn is_projective(&self, id: usize) -> bool {
        self.tau_id[id].is_some_and(|t| !self.objects[t].is_module())
    }

    pub fn is_injective(&self, id: usize) -> bool {
        self.objects[id].is_module() && self.tau_inv_rep[id].is_none()
    }

    pub fn tube_rank(&self, tube: usize) -> usize {
        self.atlas.tubes[tube].rank
    }

    fn view(&self, id: usize) -> View<'_> {
        match &self.objects[id].kind {
            ObjectKind::ShiftedProjective(i) => View::Shifted(*i),
            ObjectKind::Module { rep, .. } => {
                View::Module { rep, pres: self.pres[id].as_ref().unwrap(), tau_inv: self.tau_inv_rep[id].as_ref() }
            }
        }
    }

    /// `dim Hom_C(X, Y)`, memoised.
    pub fn hom_c(&self, x: usize, y: usize) -> Result<usize> {
        if let Some(&v) = self.memo.lock().unwrap().get(&(x, y)) {
            return Ok(v);
        }
        let v = self.cat.hom_view(&self.view(x), &self.view(y))?;
        self.memo.lock().unwrap().insert((x, y), v);
        Ok(v)
    }

    /// `dim Ext^1_C(X, Y)`, symmetric in its arguments.
    pub fn ext1_c(&self, x: usize, y: usize) -> Result<usize> {
        let q = self.cat.quiver();
        Ok(match (self.view(x), self.view(y)) {
            (View::Module { rep: a, pres: pa, .. }, View::Module { rep: b, pres: pb, .. }) => {
                ext_from(q, pa, a, b)? + ext_from(q, pb, b, a)?
            }
            (View::Module { rep, .. }, View::Shifted(j)) | (View::Shifted(j), View::Module { rep, .. }) => rep.dims[j],
            (View::Shifted(_), View::Shifted(_)) => 0,
        })
    }

    pub fn hom_h(&self, x: usize, y: usize) -> Option<usize> {
        let q = self.cat.quiver();
        Some(self.pres[x].as_ref()?.hom_into(q, self.objects[y].rep()?))
    }

    pub fn ext1_h(&self, x: usize, y: usize) -> Result<Option<usize>> {
        let (Some(p), Some(a), Some(b)) = (self.pres[x].as_ref(), self.objects[x].rep(), self.objects[y].rep()) else {
            return Ok(None);
        };
        ext_from(self.cat.quiver(), p, a, b).map(Some)
    }

    /// The object attached to a denominator vector in the acyclic root:
    /// `-e_i` gives `P_i[1]`, anything else must be a module's dimension vector.
    pub fn alpha(&self, dvec: &[i64]) -> Result<usize> {
        let negatives: Vec<usize> = (0..dvec.len()).filter(|&i| dvec[i] < 0).collect();
        if let [i] = negatives.as_slice() {
            if dvec[*i] == -1 && dvec.iter().enumerate().all(|(j, &d)| j == *i || d == 0) {
                return Ok(self.shifted[*i]);
            }
        }
        self.by_dim(dvec).ok_or_else(|| Error::Unresolved(dvec.to_vec()))
    }

    /// Checks that the listed objects form a basic cluster-tilting object.
    pub fn check_cluster_tilting(&self, t: &[usize]) -> Result<()> {
        if t.len() != self.n() {
            return Err(Error::Arity(t.len(), self.n()));
        }
        for (a, &i) in t.iter().enumerate() {
            for (b, &j) in t.iter().enumerate().skip(a) {
                if (a != b && i == j) || self.ext1_c(i, j)? != 0 {
                    return Err(Error::NotClusterTilting(a, b));
                }
            }
        }
        Ok(())
    }

    /// `t_M`: entry `i` is `dim Hom_C(T_i, M)`.
    pub fn t_vector(&self, t: &[usize], m: usize) -> Result<DenomVector> {
        self.check_cluster_tilting(t)?;
        self.t_vector_unchecked(t, m)
    }

    pub(crate) fn t_vector_unchecked(&self, t: &[usize], m: usize) -> Result<DenomVector> {
        t.iter().map(|&ti| self.hom_c(ti, m).map(|d| d as i64)).collect::<Result<Vec<_>>>().map(DenomVector)
    }

    /// AR coordinates of an arbitrary indecomposable module.
    pub fn classify(&self, rep: &QuiverRep) -> Result<Coords> {
        if let Some(id) = self.by_dim(&rep.dim_vector()) {
            return Ok(self.objects[id].coords.clone());
        }
        let q = self.cat.quiver();
        let bound = self.depth.max(8) * 4 + 16;
        let walk_to_projective = |x: &QuiverRep| -> Result<Option<(usize, usize)>> {
            let mut x = x.clone();
            for step in 0..bound {
                let pres = Presentation::compute(q, &x);
                if pres.relations.is_empty() {
                    return Ok(match pres.gens.as_slice() {
                        [(v, _)] => Some((step, *v)),
                        _ => None,
                    });
                }
                x = tau_with(q, &pres)?;
            }
            Ok(None)
        };
        let walk_to_injective = |x: &QuiverRep| -> Result<Option<(usize, usize)>> {
            let mut x = x.clone();
            for step in 0..bound {
                let next = tau_inverse(q, &x)?;
                if next.is_zero() {
                    return Ok(self.cat.injective_vertex(&x).map(|v| (step, v)));
                }
                x = next;
            }
            Ok(None)
        };
        if self.class.is_dynkin() {
            return walk_to_projective(rep)?
                .map(|(step, base)| Coords::FinitePosition { step, base })
                .ok_or_else(|| Error::Unsupported("module is not indecomposable".into()));
        }
        let defect = match self.class {
            QuiverClass::AffineA { .. } => Some(q.euler(&vec![1; q.n()], &rep.dim_vector())),
            _ => None,
        };
        if defect.is_none_or(|d| d < 0) {
            if let Some((step, base)) = walk_to_projective(rep)? {
                return Ok(Coords::Preprojective { step, base });
            }
        }
        if defect.is_none_or(|d| d > 0) {
            if let Some((step, base)) = walk_to_injective(rep)? {
                return Ok(Coords::Preinjective { step, base });
            }
        }
        Err(Error::Unsupported(format!(
            "module {} lies outside the supported components",
            DenomVector(rep.dim_vector())
        )))
    }

    pub fn dump(&self) -> InventoryDump {
        InventoryDump {
            quiver: self.class.name(),
            depth: self.depth,
            objects: self
                .objects
                .iter()
                .map(|o| ObjectJson {
                    id: o.id,
                    kind: if o.is_module() { "module" } else { "shifted_projective" },
                    label: o.label(),
                    dim: o.dim().map(<[i64]>::to_vec),
                    coords: o.coords.to_string(),
                })
                .collect(),
            tubes: self.atlas.tubes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ObjectJson {
    pub id: usize,
    pub kind: &'static str,
    pub label: String,
    pub dim: Option<Vec<i64>>,
    pub coords: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InventoryDump {
    pub quiver: String,
    pub depth: usize,
    pub objects: Vec<ObjectJson>,
    pub tubes: Vec<Tube>,
}

/// Thin modules on proper arcs of a single-cycle quiver with zero defect.
/// Exceptional regular modules of such quivers are all of this form; the
/// caller discards the non-exceptional ones.
fn cycle_arc_modules(q: &Quiver) -> Vec<QuiverRep> {
    let n = q.n();
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in q.arrows() {
        adj[s].push(t);
        adj[t].push(s);
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let next = adj[cur].iter().copied().find(|&v| v != prev && !order.contains(&v)).expect("single cycle");
        prev = cur;
        order.push(next);
    }
    let delta = vec![1i64; n];
    let mut out = Vec::new();
    for start in 0..n {
        for len in 1..n {
            let support: Vec<usize> = (0..len).map(|k| order[(start + k) % n]).collect();
            let rep = q.thin(&support);
            if q.euler(&delta, &rep.dim_vector()) == 0 {
                out.push(rep);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2tilde() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    #[test]
    fn a2tilde_tube_and_coordinates() {
        let inv = Inventory::build(&a2tilde(), 3).unwrap();
        let regular: Vec<_> = inv.objects().iter().filter(|o| o.coords.is_regular()).collect();
        assert_eq!(regular.len(), 2);
        let s2 = inv.by_dim(&[0, 1, 0]).unwrap();
        let m = inv.by_dim(&[1, 0, 1]).unwrap();
        assert_eq!(inv.get(s2).coords, Coords::Regular { tube: 0, socle: 0, ql: 1 });
        assert_eq!(inv.get(m).coords, Coords::Regular { tube: 0, socle: 1, ql: 1 });
        assert_eq!(inv.tube_rank(0), 2);
        assert_eq!(inv.tau_inv(m), Some(s2));
        assert_eq!(inv.hom_c(m, m).unwrap(), 2);
        let p1 = inv.projective(0);
        assert_eq!(inv.get(p1).coords, Coords::Preprojective { step: 0, base: 0 });
    }

    #[test]
    fn a3_inventory_size() {
        let a3 = ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let inv = Inventory::build(&a3, 0).unwrap();
        assert_eq!(inv.modules().count(), 6);
        assert_eq!(inv.len(), 9);
    }

    #[test]
    fn kronecker_has_no_regulars() {
        let k = ExchangeMatrix::from_arrows(2, &[(0, 1, 2)]).unwrap();
        let inv = Inventory::build(&k, 4).unwrap();
        assert!(inv.objects().iter().all(|o| !o.coords.is_regular()));
        assert!(inv.atlas().tubes.is_empty());
    }

    #[test]
    fn alpha_and_t_vector() {
        let inv = Inventory::build(&a2tilde(), 3).unwrap();
        assert_eq!(inv.alpha(&[0, -1, 0]).unwrap(), inv.shifted(1));
        let m = inv.alpha(&[1, 0, 1]).unwrap();
        let t = [inv.projective(0), m, inv.projective(2)];
        assert_eq!(inv.t_vector(&t, m).unwrap(), DenomVector(vec![1, 2, 1]));
        assert!(matches!(inv.alpha(&[5, 5, 5]), Err(Error::Unresolved(_))));
        let s2 = inv.by_dim(&[0, 1, 0]).unwrap();
        assert!(inv.t_vector(&[inv.projective(0), m, s2], m).is_err());
    }

    #[test]
    fn classify_beyond_depth() {
        let inv = Inventory::build(&a2tilde(), 1).unwrap();
        let q = inv.quiver();
        let mut x = q.projective(2);
        for _ in 0..3 {
            x = tau_inverse(q, &x).unwrap();
        }
        assert_eq!(inv.classify(&x).unwrap(), Coords::Preprojective { step: 3, base: 2 });
        let y = super::super::tau::tau(q, &super::super::tau::tau(q, &q.injective(0)).unwrap()).unwrap();
        assert_eq!(inv.classify(&y).unwrap(), Coords::Preinjective { step: 2, base: 0 });
        // the rank-one tube is not part of the atlas
        let homogeneous = q.thin(&[0, 1, 2]);
        assert!(inv.classify(&homogeneous).is_err());
    }

    #[test]
    fn wild_is_refused() {
        let w = ExchangeMatrix::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (0, 2, 2)]).unwrap();
        assert!(matches!(Inventory::build(&w, 2), Err(Error::Unsupported(_))));
    }
}
