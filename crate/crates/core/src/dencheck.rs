//! Checks tying cluster variables to the cluster category: T-denominators,
//! exchange compatibility and the identities between their dimensions.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exmatrix::{ExchangeMatrix, QuiverClass};
use crate::laurent::{DenomVector, LaurentPoly};
use crate::repcat::{Coords, Inventory};
use crate::seeds::{enumerate, Budget, Enumeration, ExchangeEdge, Seed};

/// How far to look for an acyclic seed in the mutation class of the input.
fn acyclic_search_len(n: usize) -> usize {
    2 * n + 2
}

/// An exchange graph explored from an acyclic root, together with the
/// exceptional objects its variables correspond to.
pub struct Instance {
    pub input: ExchangeMatrix,
    /// Mutation word taking the input seed to the acyclic root.
    pub to_root: Vec<usize>,
    pub root: Seed,
    pub enumeration: Enumeration,
    pub inventory: Inventory,
    /// Inventory id of each variable of `enumeration.variables`.
    pub objects: Vec<usize>,
    /// Seed index by mutation word.
    seed_by_word: HashMap<Vec<usize>, usize>,
}

impl Instance {
    /// `inventory_depth` bounds the transjective part of the inventory; with
    /// `None` it grows until every enumerated variable is resolved.
    pub fn new(input: &ExchangeMatrix, budget: Budget, inventory_depth: Option<usize>) -> Result<Self> {
        let (to_root, root_matrix) = if input.is_acyclic() {
            (Vec::new(), input.clone())
        } else {
            input
                .acyclic_representative(acyclic_search_len(input.n()))
                .ok_or_else(|| Error::Unsupported(format!("no acyclic seed near {input}")))?
        };
        let root = Seed::initial(root_matrix.clone());
        let enumeration = enumerate(&root, budget)?;
        let max_word = enumeration.variables.iter().map(|v| v.witness.len()).max().unwrap_or(0);

        let (inventory, objects) = match inventory_depth {
            Some(d) => {
                let inv = Inventory::build(&root_matrix, d)?;
                let objs = resolve_all(&inv, &enumeration)?;
                (inv, objs)
            }
            None => {
                // transjective steps grow roughly half as fast as mutation depth
                let mut d = max_word / 2 + 2;
                let cap = 4 * max_word + 8;
                loop {
                    let inv = Inventory::build(&root_matrix, d)?;
                    match resolve_all(&inv, &enumeration) {
                        Ok(objs) => break (inv, objs),
                        Err(e) if e.is_resolution_failure() && d < cap && !inv.class().is_dynkin() => {
                            d = (d + 2).min(cap)
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        };
        let seed_by_word = enumeration.seeds.iter().enumerate().map(|(i, s)| (s.word.clone(), i)).collect();
        Ok(Self { input: input.clone(), to_root, root, enumeration, inventory, objects, seed_by_word })
    }

    pub fn n(&self) -> usize {
        self.root.n()
    }

    pub fn class(&self) -> &QuiverClass {
        self.inventory.class()
    }

    /// A word read from the input seed, rewritten to start at the root.
    pub fn word_from_input(&self, word: &[usize]) -> Vec<usize> {
        let mut w: Vec<usize> = self.to_root.iter().rev().copied().collect();
        w.extend_from_slice(word);
        w
    }

    pub fn variable_object(&self, idx: usize) -> usize {
        self.objects[idx]
    }

    pub fn variable_index(&self, x: &LaurentPoly) -> Option<usize> {
        self.enumeration.variables.iter().position(|v| &v.poly == x)
    }

    pub fn seed_index(&self, word: &[usize]) -> Option<usize> {
        self.seed_by_word.get(word).copied()
    }

    /// Every enumerated variable rewritten in the cluster of `seed`, which must
    /// be `root.mutate_word(word)`.
    pub fn express_in(&self, seed: &Seed) -> Result<Vec<LaurentPoly>> {
        let back: Vec<usize> = seed.word.iter().rev().copied().collect();
        // the root cluster written in the variables of `seed`
        let mut base = seed.as_new_root().mutate_word(&back)?;
        base.word.clear();
        let mut rewritten: Vec<Option<Seed>> = vec![None; self.enumeration.seeds.len()];
        rewritten[0] = Some(base);
        for (i, s) in self.enumeration.seeds.iter().enumerate().skip(1) {
            let (&k, parent_word) = s.word.split_last().expect("non-root seeds have a word");
            let parent = self.seed_by_word[parent_word];
            let next = rewritten[parent].as_ref().expect("parents come first").mutate(k)?;
            rewritten[i] = Some(next);
        }
        self.enumeration
            .variables
            .iter()
            .map(|v| {
                let si = self.seed_by_word[&v.witness];
                let pos = self.enumeration.seeds[si]
                    .cluster
                    .iter()
                    .position(|p| p == &v.poly)
                    .ok_or_else(|| Error::Invariant("witness seed lacks its variable".into()))?;
                Ok(rewritten[si].as_ref().unwrap().cluster[pos].clone())
            })
            .collect()
    }

    /// Inventory ids `(M, M*, B, B')` of an exchange, `B` from the arrows into
    /// the mutated vertex; `B` and `B'` are multisets `(id, multiplicity)`.
    pub fn resolve_edge(&self, edge: &ExchangeEdge) -> Result<ResolvedEdge> {
        let rec = self.enumeration.exchange_record(edge)?;
        let seed = &self.enumeration.seeds[edge.from];
        let obj = |p: &LaurentPoly| -> Result<usize> { self.inventory.alpha(&p.denominator_vector()?.0) };
        let side = |list: &[(usize, u32)]| -> Result<Vec<(usize, u32)>> {
            list.iter().map(|&(i, m)| Ok((obj(&seed.cluster[i])?, m))).collect()
        };
        Ok(ResolvedEdge {
            edge: *edge,
            m: obj(&rec.x_m)?,
            m_star: obj(&rec.x_m_star)?,
            b: side(&rec.b_plus)?,
            b_prime: side(&rec.b_minus)?,
        })
    }

    pub fn resolved_edges(&self) -> Result<Vec<ResolvedEdge>> {
        self.enumeration.edges.iter().map(|e| self.resolve_edge(e)).collect()
    }

    pub fn describe(&self) -> String {
        format!("{} root {}", self.class().name(), self.root.matrix)
    }

    pub fn depth(&self) -> Option<usize> {
        match self.enumeration.budget {
            Budget::Depth(d) => Some(d),
            Budget::Closure { .. } => None,
        }
    }
}

fn resolve_all(inv: &Inventory, en: &Enumeration) -> Result<Vec<usize>> {
    en.variables.iter().map(|v| inv.alpha(&v.dvec.0)).collect()
}

#[derive(Clone, Debug)]
pub struct ResolvedEdge {
    pub edge: ExchangeEdge,
    pub m: usize,
    pub m_star: usize,
    pub b: Vec<(usize, u32)>,
    pub b_prime: Vec<(usize, u32)>,
}

/// The seed `(y, Gamma)` reached from the root by `word`, with
/// `T_i = tau^-1 alpha(y_i)`.
#[derive(Clone, Debug)]
pub struct TiltingChoice {
    pub word: Vec<usize>,
    pub seed: Seed,
    /// `alpha(y_i) = tau T_i`.
    pub alpha_y: Vec<usize>,
    pub t: Vec<usize>,
}

impl TiltingChoice {
    pub fn new(inst: &Instance, word: &[usize]) -> Result<Self> {
        let seed = inst.root.mutate_word(word)?;
        let inv = &inst.inventory;
        let mut alpha_y = Vec::with_capacity(seed.n());
        let mut t = Vec::with_capacity(seed.n());
        for y in &seed.cluster {
            let dvec = y.denominator_vector()?;
            let a = inv.alpha(&dvec.0)?;
            let ti = inv.tau_inv(a).ok_or_else(|| Error::Unresolved(dvec.0.clone()))?;
            alpha_y.push(a);
            t.push(ti);
        }
        inv.check_cluster_tilting(&t)?;
        inv.check_cluster_tilting(&alpha_y)?;
        Ok(Self { word: word.to_vec(), seed, alpha_y, t })
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.seed.matrix
    }

    pub fn has_regular_summand(&self, inv: &Inventory) -> bool {
        self.t.iter().any(|&i| inv.get(i).coords.is_regular())
    }

    pub fn labels(&self, inv: &Inventory) -> Vec<String> {
        self.t.iter().map(|&i| inv.get(i).label()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DenominatorCase {
    /// `alpha(x)` is not any `tau T_i`: expect `x = f / y^{t_M}`.
    I,
    /// `alpha(x) = tau T_i`: expect `x = f y_i`.
    II,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub case: DenominatorCase,
    /// Numerator once the expected denominator is cleared.
    pub f: String,
    pub positivity: bool,
    pub expected: DenomVector,
    pub actual: DenomVector,
    /// Case II only: whether `x = y_i` exactly.
    pub f_is_one: Option<bool>,
    pub diagnostics: Vec<String>,
}

/// Does `x` (written in the cluster of `tc`) have a T-denominator?
/// `m` is the inventory object attached to `x` in the acyclic root.
pub fn check_t_denominator(inv: &Inventory, tc: &TiltingChoice, x: &LaurentPoly, m: usize) -> Result<Verdict> {
    let n = x.nvars();
    let actual = x.denominator_vector()?;
    let (case, expected, f) = match tc.alpha_y.iter().position(|&a| a == m) {
        Some(i) => {
            let mut e = vec![0i64; n];
            e[i] = -1;
            (DenominatorCase::II, DenomVector(e.clone()), x.shift(&e))
        }
        None => {
            let t = inv.t_vector_unchecked(&tc.t, m)?;
            let f = x.shift(&t.0);
            (DenominatorCase::I, t, f)
        }
    };
    let polynomial = f.is_polynomial();
    let positivity = polynomial && f.positivity_check()?;
    let mut diagnostics = Vec::new();
    for i in 0..n {
        if actual.0[i] != expected.0[i] {
            diagnostics.push(format!("y{}: actual exponent {}, expected {}", i + 1, actual.0[i], expected.0[i]));
        }
    }
    if polynomial && !positivity {
        diagnostics.push(format!("numerator {f} fails the positivity condition"));
    }
    let f_is_one = (case == DenominatorCase::II).then(|| f == LaurentPoly::one(n));
    Ok(Verdict {
        holds: polynomial && positivity,
        case,
        f: f.to_string(),
        positivity,
        expected,
        actual,
        f_is_one,
        diagnostics,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Compatibility {
    pub hom_m: usize,
    pub hom_m_star: usize,
    pub hom_b: usize,
    pub hom_b_prime: usize,
    /// `M ≅ tau N` or `M* ≅ tau N`.
    pub boundary: bool,
    pub holds: bool,
}

fn hom_sum(inv: &Inventory, n: usize, side: &[(usize, u32)]) -> Result<usize> {
    side.iter().map(|&(b, m)| Ok(inv.hom_c(n, b)? * m as usize)).sum()
}

/// Compatibility of `N` with the exchange pair of `edge`.  In the boundary
/// case the "+1" identity is checked instead.
pub fn exchange_compatible(inv: &Inventory, n: usize, edge: &ResolvedEdge) -> Result<Compatibility> {
    let hom_m = inv.hom_c(n, edge.m)?;
    let hom_m_star = inv.hom_c(n, edge.m_star)?;
    let hom_b = hom_sum(inv, n, &edge.b)?;
    let hom_b_prime = hom_sum(inv, n, &edge.b_prime)?;
    let tau_n = inv.tau(n);
    let boundary = tau_n.is_some() && (tau_n == Some(edge.m) || tau_n == Some(edge.m_star));
    let sum = hom_m + hom_m_star;
    let c = Compatibility { hom_m, hom_m_star, hom_b, hom_b_prime, boundary, holds: false };
    if boundary {
        let holds = check_oldc3(&c);
        return Ok(Compatibility { holds, ..c });
    }
    if hom_b > sum || hom_b_prime > sum {
        return Err(Error::Invariant(format!(
            "Hom(N, B) = {hom_b}, Hom(N, B') = {hom_b_prime} exceed Hom(N, M) + Hom(N, M*) = {sum}"
        )));
    }
    Ok(Compatibility { holds: sum == hom_b.max(hom_b_prime), ..c })
}

/// The boundary identity `Hom(N,M) + Hom(N,M*) = max(Hom(N,B), Hom(N,B')) + 1`.
pub fn check_oldc3(c: &Compatibility) -> bool {
    c.hom_m + c.hom_m_star == c.hom_b.max(c.hom_b_prime) + 1
}

#[derive(Clone, Debug, Serialize)]
pub struct LcmCheck {
    pub holds: bool,
    /// Positions `i` with `M` or `M*` equal to `tau T_i`.
    pub boundary: Vec<usize>,
    /// Exponents of the correction monomial `c` with `t_M t_M* = c y^boundary lcm(t_B, t_B')`.
    pub correction: Vec<i64>,
    /// Whether every summand of `T` is compatible with this exchange pair.
    pub all_compatible: bool,
}

/// Entrywise `t_M + t_M* = max(t_B, t_B') (+1 at boundary positions)`.
pub fn check_lcm_identity(inv: &Inventory, tc: &TiltingChoice, edge: &ResolvedEdge) -> Result<LcmCheck> {
    let mut correction = Vec::with_capacity(tc.t.len());
    let mut boundary = Vec::new();
    let mut all_compatible = true;
    for (i, &ti) in tc.t.iter().enumerate() {
        let c = exchange_compatible(inv, ti, edge)?;
        all_compatible &= c.holds;
        let extra = usize::from(c.boundary);
        if c.boundary {
            boundary.push(i);
        }
        correction.push((c.hom_m + c.hom_m_star) as i64 - (c.hom_b.max(c.hom_b_prime) + extra) as i64);
    }
    Ok(LcmCheck { holds: correction.iter().all(|&c| c == 0), boundary, correction, all_compatible })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub theorem: String,
    pub instance: String,
    pub depth: Option<usize>,
    pub verdicts: BTreeMap<String, Value>,
    pub witnesses: Vec<Value>,
    /// The computed results agree with what the theorem predicts.
    pub passed: bool,
}

fn edge_witness(inst: &Instance, e: &ResolvedEdge, n: usize, c: &Compatibility) -> Value {
    let inv = &inst.inventory;
    let side = |s: &[(usize, u32)]| {
        s.iter().map(|&(b, m)| json!({"object": inv.get(b).label(), "multiplicity": m})).collect::<Vec<_>>()
    };
    json!({
        "kind": "edge",
        "seed_word": inst.enumeration.seeds[e.edge.from].word.iter().map(|k| k + 1).collect::<Vec<_>>(),
        "vertex": e.edge.k + 1,
        "N": inv.get(n).label(),
        "M": inv.get(e.m).label(),
        "M_star": inv.get(e.m_star).label(),
        "B": side(&e.b),
        "B_prime": side(&e.b_prime),
        "dims": c,
    })
}

fn variable_witness(inst: &Instance, idx: usize, y_form: &LaurentPoly, v: &Verdict) -> Value {
    json!({
        "kind": "variable",
        "variable": y_form.to_string(),
        "in_root": inst.enumeration.variables[idx].poly.to_string(),
        "object": inst.inventory.get(inst.objects[idx]).label(),
        "verdict": v,
    })
}

/// T-denominator verdicts for every enumerated variable; returns the first failure.
pub fn all_denominators(inst: &Instance, tc: &TiltingChoice) -> Result<(usize, Option<Value>)> {
    let ys = inst.express_in(&tc.seed)?;
    let verdicts: Vec<Verdict> = (0..ys.len())
        .into_par_iter()
        .map(|i| check_t_denominator(&inst.inventory, tc, &ys[i], inst.objects[i]))
        .collect::<Result<_>>()?;
    let witness = verdicts.iter().position(|v| !v.holds).map(|i| variable_witness(inst, i, &ys[i], &verdicts[i]));
    Ok((verdicts.len(), witness))
}

/// First edge (and summand) where some `T_i` fails compatibility.
pub fn all_compatible(inst: &Instance, tc: &TiltingChoice, edges: &[ResolvedEdge]) -> Result<Option<Value>> {
    for e in edges {
        for &ti in &tc.t {
            let c = exchange_compatible(&inst.inventory, ti, e)?;
            if !c.holds {
                return Ok(Some(edge_witness(inst, e, ti, &c)));
            }
        }
    }
    Ok(None)
}

fn tc_label(inst: &Instance, tc: &TiltingChoice) -> Value {
    json!({
        "word": tc.word.iter().map(|k| k + 1).collect::<Vec<_>>(),
        "T": tc.labels(&inst.inventory),
    })
}

/// Denominators for a tame tilting choice: (a) every enumerated variable has a
/// T-denominator, (b) no summand of `T` has quasilength `rank - 1` in its tube,
/// (c) every summand has one-dimensional endomorphisms in the cluster category.
pub fn verify_main2(inst: &Instance, tc: &TiltingChoice) -> Result<Report> {
    let inv = &inst.inventory;
    let (checked, witness) = all_denominators(inst, tc)?;
    let a = witness.is_none();
    let mut witnesses: Vec<Value> = witness.into_iter().collect();
    let mut b = true;
    let mut c = true;
    for &ti in &tc.t {
        if let Coords::Regular { tube, ql, .. } = inv.get(ti).coords {
            if ql + 1 == inv.tube_rank(tube) {
                b = false;
                witnesses.push(
                    json!({"kind": "summand", "object": inv.get(ti).label(), "coords": inv.get(ti).coords.to_string()}),
                );
            }
        }
        let end = inv.hom_c(ti, ti)?;
        if end != 1 {
            c = false;
            witnesses.push(json!({"kind": "endomorphisms", "object": inv.get(ti).label(), "dim": end}));
        }
    }
    // (b) and (c) are exact; (a) only sees the enumerated variables
    let inconclusive = a && !b;
    let mut verdicts = BTreeMap::new();
    verdicts.insert("a_bounded".into(), json!(a));
    verdicts.insert("b".into(), json!(b));
    verdicts.insert("c".into(), json!(c));
    verdicts.insert("variables_checked".into(), json!(checked));
    verdicts.insert("inconclusive".into(), json!(inconclusive));
    verdicts.insert("tilting".into(), tc_label(inst, tc));
    Ok(Report {
        theorem: "main2".into(),
        instance: inst.describe(),
        depth: inst.depth(),
        verdicts,
        witnesses,
        passed: b == c && (a || !b),
    })
}

/// Finite type: every seed as tilting choice against every variable.
pub fn verify_main3_finite(inst: &Instance) -> Result<Report> {
    if !inst.class().is_dynkin() || !inst.enumeration.closed {
        return Err(Error::Unsupported("exhaustive check needs a closed Dynkin enumeration".into()));
    }
    let results: Vec<(usize, Option<Value>)> = inst
        .enumeration
        .seeds
        .par_iter()
        .map(|s| {
            let tc = TiltingChoice::new(inst, &s.word)?;
            let (count, w) = all_denominators(inst, &tc)?;
            Ok((count, w.map(|w| json!({"tilting": tc_label(inst, &tc), "failure": w}))))
        })
        .collect::<Result<_>>()?;
    let total: usize = results.iter().map(|r| r.0).sum();
    let witnesses: Vec<Value> = results.into_iter().filter_map(|r| r.1).collect();
    let mut verdicts = BTreeMap::new();
    verdicts.insert("tilting_choices".into(), json!(inst.enumeration.seeds.len()));
    verdicts.insert("variables".into(), json!(inst.enumeration.variables.len()));
    verdicts.insert("verdicts".into(), json!(total));
    verdicts.insert("all_hold".into(), json!(witnesses.is_empty()));
    Ok(Report {
        theorem: "main3".into(),
        instance: inst.describe(),
        depth: None,
        passed: witnesses.is_empty(),
        verdicts,
        witnesses,
    })
}

/// Both sides of "all summands exchange compatible ⇔ all variables have a
/// T-denominator", over the enumerated edges and variables.
pub fn verify_t_all(inst: &Instance, tc: &TiltingChoice) -> Result<Report> {
    let edges = inst.resolved_edges()?;
    let compat = all_compatible(inst, tc, &edges)?;
    let (checked, denom) = all_denominators(inst, tc)?;
    let left = compat.is_none();
    let right = denom.is_none();
    let mut verdicts = BTreeMap::new();
    verdicts.insert("compatible_bounded".into(), json!(left));
    verdicts.insert("denominators_bounded".into(), json!(right));
    verdicts.insert("edges_checked".into(), json!(edges.len()));
    verdicts.insert("variables_checked".into(), json!(checked));
    verdicts.insert("tilting".into(), tc_label(inst, tc));
    Ok(Report {
        theorem: "t-all".into(),
        instance: inst.describe(),
        depth: inst.depth(),
        passed: left == right,
        verdicts,
        witnesses: compat.into_iter().chain(denom).collect(),
    })
}

/// The "+1" identity on every boundary pair `(N, edge)` with `N` in the inventory.
pub fn verify_oldc3(inst: &Instance) -> Result<Report> {
    let edges = inst.resolved_edges()?;
    let inv = &inst.inventory;
    let per_edge: Vec<(usize, Vec<Value>)> = edges
        .par_iter()
        .map(|e| {
            let mut count = 0;
            let mut bad = Vec::new();
            for obj in inv.objects() {
                let c = exchange_compatible(inv, obj.id, e)?;
                if c.boundary {
                    count += 1;
                    if !c.holds {
                        bad.push(edge_witness(inst, e, obj.id, &c));
                    }
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<_>>()?;
    let boundary: usize = per_edge.iter().map(|p| p.0).sum();
    let witnesses: Vec<Value> = per_edge.into_iter().flat_map(|p| p.1).collect();
    let mut verdicts = BTreeMap::new();
    verdicts.insert("edges".into(), json!(edges.len()));
    verdicts.insert("boundary_pairs".into(), json!(boundary));
    verdicts.insert("all_hold".into(), json!(witnesses.is_empty()));
    Ok(Report {
        theorem: "oldc3".into(),
        instance: inst.describe(),
        depth: inst.depth(),
        passed: witnesses.is_empty(),
        verdicts,
        witnesses,
    })
}

/// The lcm identity on every enumerated edge.  It must hold whenever every
/// summand is compatible; otherwise the correction monomial is reported.
pub fn verify_lcm(inst: &Instance, tc: &TiltingChoice) -> Result<Report> {
    let edges = inst.resolved_edges()?;
    let checks: Vec<LcmCheck> =
        edges.par_iter().map(|e| check_lcm_identity(&inst.inventory, tc, e)).collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    let mut compatible_edges = 0;
    let mut failures = 0;
    let mut corrections = 0;
    for (e, c) in edges.iter().zip(&checks) {
        if c.all_compatible {
            compatible_edges += 1;
            if !c.holds {
                failures += 1;
                witnesses.push(json!({"kind": "lcm_failure", "edge": edge_label(inst, e), "check": c}));
            }
        } else if !c.holds {
            corrections += 1;
            if corrections <= 8 {
                witnesses.push(json!({"kind": "correction", "edge": edge_label(inst, e), "check": c}));
            }
        }
    }
    let mut verdicts = BTreeMap::new();
    verdicts.insert("edges".into(), json!(edges.len()));
    verdicts.insert("compatible_edges".into(), json!(compatible_edges));
    verdicts.insert("identity_failures_on_compatible".into(), json!(failures));
    verdicts.insert("nontrivial_corrections".into(), json!(corrections));
    verdicts.insert("tilting".into(), tc_label(inst, tc));
    Ok(Report {
        theorem: "lcm".into(),
        instance: inst.describe(),
        depth: inst.depth(),
        passed: failures == 0,
        verdicts,
        witnesses,
    })
}

fn edge_label(inst: &Instance, e: &ResolvedEdge) -> Value {
    let inv = &inst.inventory;
    json!({
        "seed_word": inst.enumeration.seeds[e.edge.from].word.iter().map(|k| k + 1).collect::<Vec<_>>(),
        "vertex": e.edge.k + 1,
        "M": inv.get(e.m).label(),
        "M_star": inv.get(e.m_star).label(),
    })
}

/// Inventory objects sharing a t-vector for the given tilting choice.
/// Experimental: nothing is asserted about the outcome.
pub fn t_vector_collisions(inv: &Inventory, tc: &TiltingChoice) -> Result<Vec<(DenomVector, Vec<usize>)>> {
    let mut groups: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for obj in inv.objects() {
        groups.entry(inv.t_vector_unchecked(&tc.t, obj.id)?.0).or_default().push(obj.id);
    }
    Ok(groups.into_iter().filter(|(_, ids)| ids.len() > 1).map(|(t, ids)| (DenomVector(t), ids)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2tilde_q() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    #[test]
    fn one_vertex_exchange_is_a_boundary_pair() {
        let a1 = ExchangeMatrix::zero(1);
        let inst = Instance::new(&a1, Budget::closure(), None).unwrap();
        assert_eq!(inst.enumeration.variables.len(), 2);
        let edges = inst.resolved_edges().unwrap();
        assert_eq!(edges.len(), 1);
        let p1 = inst.inventory.projective(0);
        let c = exchange_compatible(&inst.inventory, p1, &edges[0]).unwrap();
        assert!(c.boundary && c.holds);
        assert_eq!((c.hom_m + c.hom_m_star, c.hom_b.max(c.hom_b_prime)), (1, 0));
        assert!(verify_oldc3(&inst).unwrap().passed);
    }

    #[test]
    fn gamma_seed_counterexample() {
        let inst = Instance::new(&a2tilde_q(), Budget::Depth(5), None).unwrap();
        let tc = TiltingChoice::new(&inst, &[1]).unwrap();
        let inv = &inst.inventory;
        assert_eq!(tc.labels(inv), vec!["(1,1,2)", "(1,0,1)", "(0,0,1)"]);
        let ys = inst.express_in(&tc.seed).unwrap();
        let target = LaurentPoly::parse("((y1+y3)^2+y2)/(y1*y2*y3)", 3).unwrap();
        let idx = ys.iter().position(|y| y == &target).expect("X_M within depth");
        assert_eq!(inv.get(inst.objects[idx]).label(), "(1,0,1)");
        let v = check_t_denominator(inv, &tc, &ys[idx], inst.objects[idx]).unwrap();
        assert!(!v.holds);
        assert_eq!(v.actual, DenomVector(vec![1, 1, 1]));
        assert_eq!(v.expected, DenomVector(vec![1, 2, 1]));
        let r = verify_main2(&inst, &tc).unwrap();
        assert_eq!(r.verdicts["b"], json!(false));
        assert_eq!(r.verdicts["c"], json!(false));
        assert_eq!(r.verdicts["a_bounded"], json!(false));
        assert!(r.passed);
    }

    #[test]
    fn initial_variables_are_case_two() {
        let inst = Instance::new(&a2tilde_q(), Budget::Depth(2), None).unwrap();
        let tc = TiltingChoice::new(&inst, &[0, 2]).unwrap();
        for (i, y) in tc.seed.cluster.iter().enumerate() {
            let idx = inst.variable_index(y).unwrap();
            let y_local = LaurentPoly::var(3, i);
            let v = check_t_denominator(&inst.inventory, &tc, &y_local, inst.objects[idx]).unwrap();
            assert!(v.holds);
            assert_eq!(v.case, DenominatorCase::II);
            assert_eq!(v.f_is_one, Some(true));
        }
    }
}
