//! Seeds, seed mutation and breadth-first exploration of the exchange graph.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exmatrix::ExchangeMatrix;
use crate::laurent::{DenomVector, LaurentPoly};

/// A cluster together with its exchange matrix.
///
/// `shadow`, when present, holds the same cluster variables written in the
/// variables of some other seed; it is mutated in lockstep with `cluster`.
#[derive(Clone, Debug)]
pub struct Seed {
    pub cluster: Vec<LaurentPoly>,
    pub matrix: ExchangeMatrix,
    /// 0-indexed mutation word from the seed this one was generated from.
    pub word: Vec<usize>,
    pub shadow: Option<Vec<LaurentPoly>>,
}

/// Variables on the two sides of an exchange at position `k`.
///
/// `b_plus` collects positions `i` with `b[i][k] > 0` (arrows into `k`) and
/// `b_minus` those with `b[i][k] < 0`, each with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangePairRecord {
    pub k: usize,
    pub x_m: LaurentPoly,
    pub x_m_star: LaurentPoly,
    pub b_plus: Vec<(usize, u32)>,
    pub b_minus: Vec<(usize, u32)>,
}

#[derive(Clone, Debug)]
pub struct ClusterVariableRecord {
    pub poly: LaurentPoly,
    pub dvec: DenomVector,
    /// Shortest mutation word (0-indexed) from the enumeration root to a seed
    /// containing this variable.
    pub witness: Vec<usize>,
    pub shadow: Option<LaurentPoly>,
}

fn exchange_monomials(cluster: &[LaurentPoly], matrix: &ExchangeMatrix, k: usize) -> (LaurentPoly, LaurentPoly) {
    let n = matrix.n();
    let nv = cluster[0].nvars();
    let mut plus = LaurentPoly::one(nv);
    let mut minus = LaurentPoly::one(nv);
    for i in 0..n {
        let b = matrix.get(i, k);
        if b > 0 {
            plus = &plus * &cluster[i].pow(b as u32);
        } else if b < 0 {
            minus = &minus * &cluster[i].pow((-b) as u32);
        }
    }
    (plus, minus)
}

fn exchange(cluster: &[LaurentPoly], matrix: &ExchangeMatrix, k: usize) -> Result<LaurentPoly> {
    let (plus, minus) = exchange_monomials(cluster, matrix, k);
    (&plus + &minus).exact_div(&cluster[k]).map_err(|e| Error::Invariant(format!("Laurent phenomenon violated: {e}")))
}

impl Seed {
    /// The seed `({y_1, ..., y_n}, matrix)`.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let n = matrix.n();
        Self { cluster: (0..n).map(|i| LaurentPoly::var(n, i)).collect(), matrix, word: Vec::new(), shadow: None }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        self.matrix.check_vertex(k)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = exchange(&self.cluster, &self.matrix, k)?;
        let shadow = match &self.shadow {
            Some(sh) => {
                let mut next = sh.clone();
                next[k] = exchange(sh, &self.matrix, k)?;
                Some(next)
            }
            None => None,
        };
        let mut word = self.word.clone();
        word.push(k);
        Ok(Seed { cluster, matrix: self.matrix.mutate(k)?, word, shadow })
    }

    pub fn mutate_word(&self, word: &[usize]) -> Result<Seed> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    pub fn exchange_data(&self, k: usize) -> Result<ExchangePairRecord> {
        self.matrix.check_vertex(k)?;
        let x_m_star = exchange(&self.cluster, &self.matrix, k)?;
        let mut b_plus = Vec::new();
        let mut b_minus = Vec::new();
        for i in 0..self.n() {
            let b = self.matrix.get(i, k);
            if b > 0 {
                b_plus.push((i, b as u32));
            } else if b < 0 {
                b_minus.push((i, (-b) as u32));
            }
        }
        Ok(ExchangePairRecord { k, x_m: self.cluster[k].clone(), x_m_star, b_plus, b_minus })
    }

    /// Sorted canonical strings of the cluster; two seeds from one root with
    /// equal keys are the same seed up to reordering.
    pub fn key(&self) -> Vec<String> {
        let mut k: Vec<String> = self.cluster.iter().map(ToString::to_string).collect();
        k.sort();
        k
    }

    /// Replaces the cluster by fresh initial variables and keeps the current
    /// expressions as the shadow.
    pub fn as_new_root(&self) -> Seed {
        let mut root = Seed::initial(self.matrix.clone());
        root.shadow = Some(self.cluster.clone());
        root
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            n: self.n(),
            word: self.word.iter().map(|k| k + 1).collect(),
            cluster: self.cluster.iter().map(ToString::to_string).collect(),
            matrix: self.matrix.rows(),
        }
    }
}

impl ExchangePairRecord {
    /// Checks `x_M * x_M^* = x_{B+} + x_{B-}` against the given cluster.
    pub fn holds_in(&self, cluster: &[LaurentPoly]) -> bool {
        let prod = |set: &[(usize, u32)]| {
            set.iter().fold(LaurentPoly::one(self.x_m.nvars()), |acc, &(i, m)| &acc * &cluster[i].pow(m))
        };
        &self.x_m * &self.x_m_star == &prod(&self.b_plus) + &prod(&self.b_minus)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedJson {
    pub n: usize,
    pub word: Vec<usize>,
    pub cluster: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// Run until no new seeds appear. Only accepted for finite type; aborts
    /// with `BudgetExhausted` beyond `max_seeds`.
    Closure { max_seeds: usize },
    /// Seeds at mutation distance at most this from the root.
    Depth(usize),
}

impl Budget {
    pub const DEFAULT_DEPTH: usize = 8;

    pub fn closure() -> Self {
        Budget::Closure { max_seeds: 200_000 }
    }
}

/// An edge of the exchange graph: mutating seed `from` at position `k` gives
/// seed `to` (possibly with its cluster listed in another order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExchangeEdge {
    pub from: usize,
    pub k: usize,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Seeds in breadth-first order; the first is the root.
    pub seeds: Vec<Seed>,
    pub depths: Vec<usize>,
    /// Distinct cluster variables, sorted by canonical string.
    pub variables: Vec<ClusterVariableRecord>,
    /// Each undirected exchange edge once, oriented from the seed found first.
    pub edges: Vec<ExchangeEdge>,
    /// No seed outside the enumerated set is adjacent to it.
    pub closed: bool,
    pub budget: Budget,
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    pub parallel: bool,
}

/// Finite-type test for the mutation class of `matrix`: look for an acyclic
/// member and check that it is Dynkin.
pub fn is_finite_type(matrix: &ExchangeMatrix) -> bool {
    let reach = 2 * matrix.n() + 2;
    matrix.acyclic_representative(reach).is_some_and(|(_, acyclic)| acyclic.classify().is_dynkin())
}

pub fn enumerate(root: &Seed, budget: Budget) -> Result<Enumeration> {
    enumerate_with(root, budget, &EnumerateOptions::default())
}

pub fn enumerate_with(root: &Seed, budget: Budget, opts: &EnumerateOptions) -> Result<Enumeration> {
    if let Budget::Closure { .. } = budget {
        if !is_finite_type(&root.matrix) {
            let class = root
                .matrix
                .acyclic_representative(2 * root.n() + 2)
                .map(|(_, m)| m.classify().name())
                .unwrap_or_else(|| "no acyclic seed found".into());
            return Err(Error::ClosureRefused(class));
        }
    }
    let n = root.n();
    let mut root = root.clone();
    root.word.clear();

    let mut seeds = vec![root.clone()];
    let mut depths = vec![0usize];
    let mut index: HashMap<Vec<String>, usize> = HashMap::new();
    index.insert(root.key(), 0);
    let mut edge_set: HashMap<(usize, usize), ExchangeEdge> = HashMap::new();
    let mut frontier = vec![0usize];
    let mut depth = 0usize;
    let closed;

    loop {
        if frontier.is_empty() {
            closed = true;
            break;
        }
        let jobs: Vec<(usize, usize)> = frontier.iter().flat_map(|&s| (0..n).map(move |k| (s, k))).collect();
        let mutate = |&(s, k): &(usize, usize)| seeds[s].mutate(k);
        let produced: Vec<Result<Seed>> =
            if opts.parallel { jobs.par_iter().map(mutate).collect() } else { jobs.iter().map(mutate).collect() };

        let at_limit = matches!(budget, Budget::Depth(d) if depth >= d);
        let mut next = Vec::new();
        let mut escaped = false;
        for (&(s, k), result) in jobs.iter().zip(produced) {
            let seed = result?;
            let key = seed.key();
            let to = match index.get(&key) {
                Some(&existing) => {
                    check_same_seed(&seeds[existing], &seed)?;
                    existing
                }
                None if at_limit => {
                    escaped = true;
                    continue;
                }
                None => {
                    let id = seeds.len();
                    if let Budget::Closure { max_seeds } = budget {
                        if id >= max_seeds {
                            return Err(Error::BudgetExhausted { seeds: id });
                        }
                    }
                    index.insert(key, id);
                    seeds.push(seed);
                    depths.push(depth + 1);
                    next.push(id);
                    id
                }
            };
            let pair = (s.min(to), s.max(to));
            edge_set.entry(pair).or_insert(ExchangeEdge { from: s, k, to });
        }
        if at_limit {
            closed = !escaped;
            break;
        }
        frontier = next;
        depth += 1;
    }

    let mut edges: Vec<ExchangeEdge> = edge_set.into_values().collect();
    edges.sort();
    let variables = collect_variables(&seeds)?;
    Ok(Enumeration { seeds, depths, variables, edges, closed, budget })
}

/// On a dedup hit the two matrices must agree after matching cluster positions.
fn check_same_seed(old: &Seed, new: &Seed) -> Result<()> {
    let old_pos: HashMap<String, usize> = old.cluster.iter().enumerate().map(|(i, p)| (p.to_string(), i)).collect();
    let perm: Vec<usize> = new.cluster.iter().map(|p| old_pos[&p.to_string()]).collect();
    if old.matrix.permuted(&perm) != new.matrix {
        return Err(Error::Invariant(format!(
            "equal clusters with different quivers: {} vs {}",
            old.matrix, new.matrix
        )));
    }
    Ok(())
}

fn collect_variables(seeds: &[Seed]) -> Result<Vec<ClusterVariableRecord>> {
    let mut seen: HashMap<String, ClusterVariableRecord> = HashMap::new();
    for seed in seeds {
        for (i, poly) in seed.cluster.iter().enumerate() {
            let key = poly.to_string();
            if seen.contains_key(&key) {
                continue;
            }
            seen.insert(
                key,
                ClusterVariableRecord {
                    poly: poly.clone(),
                    dvec: poly.denominator_vector()?,
                    witness: seed.word.clone(),
                    shadow: seed.shadow.as_ref().map(|s| s[i].clone()),
                },
            );
        }
    }
    let mut vars: Vec<(String, ClusterVariableRecord)> = seen.into_iter().collect();
    vars.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(vars.into_iter().map(|(_, v)| v).collect())
}

impl Enumeration {
    pub fn exchange_record(&self, edge: &ExchangeEdge) -> Result<ExchangePairRecord> {
        self.seeds[edge.from].exchange_data(edge.k)
    }

    pub fn cluster_count(&self) -> usize {
        self.seeds.len()
    }

    pub fn report(&self) -> EnumerationReport {
        EnumerationReport {
            clusters: self.seeds.len(),
            closed: self.closed,
            depth: match self.budget {
                Budget::Depth(d) => Some(d),
                Budget::Closure { .. } => None,
            },
            edges: self.edges.len(),
            variables: self
                .variables
                .iter()
                .map(|v| VariableJson {
                    variable: v.poly.to_string(),
                    raw: v.poly.raw_string(),
                    dvec: v.dvec.0.clone(),
                    witness: v.witness.iter().map(|k| k + 1).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VariableJson {
    pub variable: String,
    pub raw: String,
    pub dvec: Vec<i64>,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub clusters: usize,
    pub closed: bool,
    pub depth: Option<usize>,
    pub edges: usize,
    pub variables: Vec<VariableJson>,
}

/// Explores the exchange graph around `seed` with its cluster as the new
/// initial variables. Every record's `poly` is written in the new variables
/// and its `shadow` in the variables `seed` was expressed in.
pub fn reroot_enumeration(seed: &Seed, budget: Budget) -> Result<Enumeration> {
    enumerate(&seed.as_new_root(), budget)
}

/// Re-expresses `variables` (written in the variables of `seed`'s root) in the
/// cluster of `seed`. Entries not reached within `budget` come back as `None`.
pub fn reroot(variables: &[LaurentPoly], seed: &Seed, budget: Budget) -> Result<Vec<Option<LaurentPoly>>> {
    let en = reroot_enumeration(seed, budget)?;
    let by_shadow: HashMap<String, &LaurentPoly> =
        en.variables.iter().filter_map(|v| v.shadow.as_ref().map(|s| (s.to_string(), &v.poly))).collect();
    Ok(variables.iter().map(|v| by_shadow.get(&v.to_string()).map(|p| (*p).clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_a3() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    fn gamma() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(1, 0, 1), (0, 2, 2), (2, 1, 1)]).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn mutation_examples() {
        let root = Seed::initial(cyclic_a3());
        let s2 = root.mutate(1).unwrap();
        assert_eq!(s2.cluster[1], p("(y1+y3)/y2"));
        let s21 = s2.mutate(0).unwrap();
        assert_eq!(s21.cluster[0], p("(y1+y2+y3)/(y1*y2)"));
        assert_eq!(s21.word, vec![1, 0]);

        let g = Seed::initial(gamma()).mutate(2).unwrap();
        assert_eq!(g.cluster[2], p("(y1^2+y2)/y3"));
    }

    #[test]
    fn seed_mutation_is_involution() {
        let root = Seed::initial(gamma());
        for k in 0..3 {
            let back = root.mutate(k).unwrap().mutate(k).unwrap();
            assert_eq!(back.cluster, root.cluster);
            assert_eq!(back.matrix, root.matrix);
        }
    }

    #[test]
    fn exchange_data_examples() {
        let rec = Seed::initial(cyclic_a3()).exchange_data(1).unwrap();
        assert_eq!(rec.b_plus, vec![(0, 1)]);
        assert_eq!(rec.b_minus, vec![(2, 1)]);
        assert!(rec.holds_in(&Seed::initial(cyclic_a3()).cluster));

        let rec = Seed::initial(gamma()).exchange_data(2).unwrap();
        assert_eq!(rec.b_plus, vec![(0, 2)]);
        assert_eq!(rec.b_minus, vec![(1, 1)]);

        let isolated = Seed::initial(ExchangeMatrix::zero(2));
        let rec = isolated.exchange_data(0).unwrap();
        assert!(rec.b_plus.is_empty() && rec.b_minus.is_empty());
        assert_eq!(rec.x_m_star, LaurentPoly::parse("2/y1", 2).unwrap());
    }

    #[test]
    fn depth_zero() {
        let en = enumerate(&Seed::initial(gamma()), Budget::Depth(0)).unwrap();
        assert_eq!(en.seeds.len(), 1);
        assert_eq!(en.variables.len(), 3);
        assert!(!en.closed);
    }

    #[test]
    fn a3_closure_counts() {
        let en = enumerate(&Seed::initial(cyclic_a3()), Budget::closure()).unwrap();
        assert!(en.closed);
        assert_eq!(en.variables.len(), 9);
        assert_eq!(en.seeds.len(), 14);
        // associahedron of type A3: 14 vertices of degree 3
        assert_eq!(en.edges.len(), 14 * 3 / 2);
    }

    #[test]
    fn closure_refused_for_infinite_type() {
        let err = enumerate(&Seed::initial(gamma()), Budget::closure()).unwrap_err();
        assert!(matches!(err, Error::ClosureRefused(_)));
    }

    #[test]
    fn closure_budget_exhaustion_is_distinct() {
        let err = enumerate(&Seed::initial(cyclic_a3()), Budget::Closure { max_seeds: 5 }).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted { seeds: 5 });
    }

    #[test]
    fn parallel_matches_sequential() {
        let root = Seed::initial(gamma());
        let a = enumerate(&root, Budget::Depth(5)).unwrap();
        let b = enumerate_with(&root, Budget::Depth(5), &EnumerateOptions { parallel: true }).unwrap();
        assert_eq!(a.edges, b.edges);
        let strings = |e: &Enumeration| e.variables.iter().map(|v| v.poly.to_string()).collect::<Vec<_>>();
        assert_eq!(strings(&a), strings(&b));
    }

    #[test]
    fn reroot_identity_and_round_trip() {
        let root = Seed::initial(cyclic_a3());
        let en = enumerate(&root, Budget::closure()).unwrap();
        let vars: Vec<LaurentPoly> = en.variables.iter().map(|v| v.poly.clone()).collect();
        let same = reroot(&vars, &root, Budget::closure()).unwrap();
        for (v, r) in vars.iter().zip(&same) {
            assert_eq!(r.as_ref(), Some(v));
        }

        // Re-express at the seed reached by [2, 1]; then substituting the
        // shadow values back must reproduce each variable.
        let target = root.mutate_word(&[1, 0]).unwrap();
        let rerooted = reroot_enumeration(&target, Budget::closure()).unwrap();
        assert_eq!(rerooted.variables.len(), 9);
        for v in &rerooted.variables {
            assert!(v.shadow.is_some());
        }
    }

    #[test]
    fn json_uses_one_based_words() {
        let s = Seed::initial(cyclic_a3()).mutate_word(&[1, 0]).unwrap();
        let j = s.to_json();
        assert_eq!(j.word, vec![2, 1]);
        assert_eq!(j.n, 3);
        assert!(j.cluster.contains(&"(y1 + y2 + y3) / (y1*y2)".to_string()));
    }
}
