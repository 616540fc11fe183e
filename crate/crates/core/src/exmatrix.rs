//! Skew-symmetric exchange matrices and the quivers they encode.
//!
//! Convention: `b[i][j] > 0` means `b[i][j]` arrows `i -> j`. Vertices are
//! 0-indexed in memory; the text format and every printed word use 1-indexed
//! labels.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, b: vec![0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut b = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Arity(row.len(), n));
            }
            b.extend_from_slice(row);
        }
        let m = Self { n, b };
        m.validate()?;
        Ok(m)
    }

    /// Builds a matrix from 0-indexed `(source, target, multiplicity)` triples.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, i64)]) -> Result<Self> {
        let mut m = Self::zero(n);
        for &(i, j, mult) in arrows {
            m.add_arrows(i, j, mult)?;
        }
        Ok(m)
    }

    fn add_arrows(&mut self, i: usize, j: usize, mult: i64) -> Result<()> {
        let n = self.n;
        for v in [i, j] {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
        }
        if i == j {
            return Err(Error::NotSkewSymmetric { i, j });
        }
        if mult < 0 || self.b[j * n + i] > 0 {
            // arrows in both directions would form a 2-cycle
            return Err(Error::NotSkewSymmetric { i, j });
        }
        let cur = self.b[i * n + j];
        let next = cur.checked_add(mult).ok_or(Error::Overflow)?;
        self.b[i * n + j] = next;
        self.b[j * n + i] = -next;
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            if self.get(i, i) != 0 {
                return Err(Error::NotSkewSymmetric { i, j: i });
            }
            for j in i + 1..self.n {
                if self.get(i, j) != -self.get(j, i) {
                    return Err(Error::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.b.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    /// All `(i, j, m)` with `m = b[i][j] > 0`, 0-indexed, in row-major order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| {
                let m = self.get(i, j);
                (m > 0).then_some((i, j, m))
            })
        })
    }

    pub fn check_vertex(&self, k: usize) -> Result<()> {
        if k < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { index: k, n: self.n })
        }
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        self.check_vertex(k)?;
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let bij = self.get(i, j);
                out[i * n + j] = if i == k || j == k {
                    -bij
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    let a = bik.abs().checked_mul(bkj).ok_or(Error::Overflow)?;
                    let b = bik.checked_mul(bkj.abs()).ok_or(Error::Overflow)?;
                    let sum = a.checked_add(b).ok_or(Error::Overflow)?;
                    bij.checked_add(sum / 2).ok_or(Error::Overflow)?
                };
            }
        }
        let m = Self { n, b: out };
        debug_assert!(m.validate().is_ok());
        Ok(m)
    }

    /// Mutates along a 0-indexed word, left to right.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |m, &k| m.mutate(k))
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        for (_, j, _) in self.arrows() {
            indeg[j] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for j in 0..n {
                if self.get(v, j) > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
        }
        seen == n
    }

    /// A topological order of the vertices (sources first). `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        for (_, j, _) in self.arrows() {
            indeg[j] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for j in (0..n).rev() {
                if self.get(v, j) > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        ready.push(j);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Shortest mutation word (0-indexed) leading to an acyclic quiver, searching
    /// the mutation class breadth-first up to `max_len` mutations.
    pub fn acyclic_representative(&self, max_len: usize) -> Option<(Vec<usize>, ExchangeMatrix)> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.b.clone());
        queue.push_back((Vec::new(), self.clone()));
        while let Some((word, m)) = queue.pop_front() {
            if m.is_acyclic() {
                return Some((word, m));
            }
            if word.len() == max_len {
                continue;
            }
            for k in 0..m.n {
                if word.last() == Some(&k) {
                    continue;
                }
                let Ok(next) = m.mutate(k) else { continue };
                if seen.insert(next.b.clone()) {
                    let mut w = word.clone();
                    w.push(k);
                    queue.push_back((w, next));
                }
            }
        }
        None
    }

    /// Relabels vertices: entry `(i, j)` of the result is `b[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut b = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        Self { n, b }
    }

    /// Parses the quiver text format: first line `n`, then `i j m` lines
    /// (m arrows i -> j, 1-indexed). `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(no, l)| (no + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing vertex count".into() })?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse { line: first_no, msg: format!("expected vertex count, found {first:?}") })?;
        let mut m = Self::zero(n);
        for (no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: String| Error::Parse { line: no, msg };
            if fields.len() != 3 {
                return Err(bad(format!("expected `i j m`, found {line:?}")));
            }
            let i: usize = fields[0].parse().map_err(|_| bad(format!("bad vertex {:?}", fields[0])))?;
            let j: usize = fields[1].parse().map_err(|_| bad(format!("bad vertex {:?}", fields[1])))?;
            let mult: i64 = fields[2].parse().map_err(|_| bad(format!("bad multiplicity {:?}", fields[2])))?;
            if i == 0 || j == 0 || i > n || j > n {
                return Err(bad(format!("vertex out of range 1..={n}")));
            }
            if mult <= 0 {
                return Err(bad("multiplicity must be positive".into()));
            }
            m.add_arrows(i - 1, j - 1, mult).map_err(|e| bad(e.to_string()))?;
        }
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (i, j, m) in self.arrows() {
            s.push_str(&format!("{} {} {}\n", i + 1, j + 1, m));
        }
        s
    }

    pub fn classify(&self) -> QuiverClass {
        classify(self)
    }
}

impl TryFrom<Vec<Vec<i64>>> for ExchangeMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<ExchangeMatrix> for Vec<Vec<i64>> {
    fn from(m: ExchangeMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .map(
                |(i, j, m)| {
                    if m == 1 {
                        format!("{}->{}", i + 1, j + 1)
                    } else {
                        format!("{}={}=>{}", i + 1, m, j + 1)
                    }
                },
            )
            .collect();
        write!(f, "Q{}[{}]", self.n, arrows.join(", "))
    }
}

/// Representation type of the underlying graph of an (acyclic) quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum QuiverClass {
    /// Every connected component is a simply-laced Dynkin diagram.
    Dynkin {
        label: String,
    },
    /// Two vertices joined by `arrows >= 2` arrows.
    Rank2 {
        arrows: i64,
    },
    /// An unoriented cycle with `p` arrows one way round and `q` the other, `p >= q`.
    AffineA {
        p: usize,
        q: usize,
    },
    OtherTame,
    Wild,
}

impl QuiverClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, QuiverClass::Dynkin { .. })
    }

    pub fn name(&self) -> String {
        match self {
            QuiverClass::Dynkin { label } => format!("Dynkin {label}"),
            QuiverClass::Rank2 { arrows } => format!("rank-2 ({arrows} arrows)"),
            QuiverClass::AffineA { p, q } => format!("affine-A({p},{q})"),
            QuiverClass::OtherTame => "other-tame".into(),
            QuiverClass::Wild => "wild".into(),
        }
    }
}

impl fmt::Display for QuiverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, PartialEq, Eq)]
enum ComponentKind {
    Dynkin(String),
    Tame,
    Wild,
}

fn classify(m: &ExchangeMatrix) -> QuiverClass {
    let n = m.n();
    let weight = |i: usize, j: usize| m.get(i, j).abs();
    let components = components(m);

    let kinds: Vec<ComponentKind> = components.iter().map(|c| classify_component(m, c)).collect();
    if kinds.iter().all(|k| matches!(k, ComponentKind::Dynkin(_))) {
        let mut labels: Vec<String> = kinds
            .into_iter()
            .map(|k| match k {
                ComponentKind::Dynkin(l) => l,
                _ => unreachable!(),
            })
            .collect();
        labels.sort();
        return QuiverClass::Dynkin { label: labels.join("+") };
    }
    if n == 2 {
        return QuiverClass::Rank2 { arrows: weight(0, 1) };
    }
    if components.len() == 1 {
        if let Some((p, q)) = cycle_orientation(m) {
            return QuiverClass::AffineA { p, q };
        }
    }
    if kinds.iter().all(|k| *k != ComponentKind::Wild) {
        QuiverClass::OtherTame
    } else {
        QuiverClass::Wild
    }
}

fn components(m: &ExchangeMatrix) -> Vec<Vec<usize>> {
    let n = m.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < comp.len() {
            let v = comp[idx];
            idx += 1;
            for w in 0..n {
                if !seen[w] && m.get(v, w) != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn classify_component(m: &ExchangeMatrix, comp: &[usize]) -> ComponentKind {
    let v = comp.len();
    let mut edges = 0i64;
    let mut multi = false;
    let mut degree = vec![0usize; m.n()];
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            let w = m.get(i, j).abs();
            if w > 0 {
                edges += w;
                degree[i] += w as usize;
                degree[j] += w as usize;
                if w > 1 {
                    multi = true;
                }
            }
        }
    }
    if multi {
        // Only the Kronecker quiver is tame among multigraphs.
        return if v == 2 && edges == 2 { ComponentKind::Tame } else { ComponentKind::Wild };
    }
    if edges as usize == v {
        let is_cycle = comp.iter().all(|&i| degree[i] == 2);
        return if is_cycle { ComponentKind::Tame } else { ComponentKind::Wild };
    }
    if edges as usize != v - 1 {
        return ComponentKind::Wild;
    }
    // Trees.
    let branch: Vec<usize> = comp.iter().copied().filter(|&i| degree[i] >= 3).collect();
    match branch.as_slice() {
        [] => ComponentKind::Dynkin(format!("A{v}")),
        [c] if degree[*c] == 3 => {
            let mut arms = arm_lengths(m, *c, &degree);
            arms.sort_unstable();
            let (p, q, r) = (arms[0] as u64 + 1, arms[1] as u64 + 1, arms[2] as u64 + 1);
            let lhs = q * r + p * r + p * q;
            let rhs = p * q * r;
            if lhs > rhs {
                if arms[0] == 1 && arms[1] == 1 {
                    ComponentKind::Dynkin(format!("D{v}"))
                } else {
                    ComponentKind::Dynkin(format!("E{v}"))
                }
            } else if lhs == rhs {
                ComponentKind::Tame
            } else {
                ComponentKind::Wild
            }
        }
        [c] if degree[*c] == 4 && v == 5 => ComponentKind::Tame,
        [c1, c2] if degree[*c1] == 3 && degree[*c2] == 3 => {
            // affine D: each branch point carries two leaves
            let leaves = |c: usize| (0..m.n()).filter(|&w| m.get(c, w) != 0 && degree[w] == 1).count();
            if leaves(*c1) == 2 && leaves(*c2) == 2 {
                ComponentKind::Tame
            } else {
                ComponentKind::Wild
            }
        }
        _ => ComponentKind::Wild,
    }
}

fn arm_lengths(m: &ExchangeMatrix, center: usize, degree: &[usize]) -> Vec<usize> {
    let n = m.n();
    let mut arms = Vec::new();
    for start in (0..n).filter(|&w| m.get(center, w) != 0) {
        let mut len = 1;
        let (mut prev, mut cur) = (center, start);
        while degree[cur] == 2 {
            let next = (0..n).find(|&w| w != prev && m.get(cur, w) != 0).expect("degree two");
            prev = cur;
            cur = next;
            len += 1;
        }
        arms.push(len);
    }
    arms
}

/// For a quiver whose underlying graph is a single cycle through all vertices,
/// counts arrows oriented each way around it.
fn cycle_orientation(m: &ExchangeMatrix) -> Option<(usize, usize)> {
    let n = m.n();
    if n < 3 {
        return None;
    }
    let neighbours = |v: usize| (0..n).filter(move |&w| m.get(v, w) != 0);
    if (0..n).any(|v| neighbours(v).count() != 2 || neighbours(v).any(|w| m.get(v, w).abs() != 1)) {
        return None;
    }
    let (mut forward, mut backward) = (0, 0);
    let (mut prev, mut cur) = (0usize, neighbours(0).next()?);
    if m.get(0, cur) > 0 {
        forward += 1
    } else {
        backward += 1
    }
    let mut steps = 1;
    while cur != 0 {
        let next = neighbours(cur).find(|&w| w != prev)?;
        if m.get(cur, next) > 0 {
            forward += 1
        } else {
            backward += 1
        }
        prev = cur;
        cur = next;
        steps += 1;
        if steps > n {
            return None;
        }
    }
    (steps == n).then_some((forward.max(backward), forward.min(backward)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_a3() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    fn a2tilde_q() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    fn a2tilde_gamma() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(3, &[(1, 0, 1), (0, 2, 2), (2, 1, 1)]).unwrap()
    }

    /// Second, independent application of the mutation rule: reverse arrows at k,
    /// then add one arrow i -> j for every path i -> k -> j, then cancel 2-cycles.
    fn mutate_by_paths(m: &ExchangeMatrix, k: usize) -> ExchangeMatrix {
        let n = m.n();
        let mut count = vec![vec![0i64; n]; n];
        for (i, j, mult) in m.arrows() {
            if i == k || j == k {
                count[j][i] += mult;
            } else {
                count[i][j] += mult;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let into_k = m.get(i, k).max(0);
                let out_of_k = m.get(k, j).max(0);
                if i != k && j != k {
                    count[i][j] += into_k * out_of_k;
                }
            }
        }
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = count[i][j] - count[j][i];
            }
        }
        ExchangeMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn cyclic_a3_mutation_at_first_vertex() {
        let m = cyclic_a3().mutate(0).unwrap();
        let expected = ExchangeMatrix::from_arrows(3, &[(1, 0, 1), (0, 2, 1)]).unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(mutate_by_paths(&cyclic_a3(), 0), expected);
    }

    #[test]
    fn mutation_agrees_with_path_rule() {
        for m in [cyclic_a3(), a2tilde_q(), a2tilde_gamma()] {
            for k in 0..3 {
                assert_eq!(m.mutate(k).unwrap(), mutate_by_paths(&m, k));
            }
        }
    }

    #[test]
    fn mutation_is_involution_on_gamma() {
        let g = a2tilde_gamma();
        for k in 0..3 {
            assert_eq!(g.mutate(k).unwrap().mutate(k).unwrap(), g);
        }
    }

    #[test]
    fn single_vertex() {
        let m = ExchangeMatrix::zero(1);
        assert_eq!(m.mutate(0).unwrap(), m);
        assert!(m.mutate(1).is_err());
    }

    #[test]
    fn gamma_is_a_mutation_of_q() {
        assert_eq!(a2tilde_q().mutate(1).unwrap(), a2tilde_gamma());
    }

    #[test]
    fn acyclicity() {
        assert!(a2tilde_q().is_acyclic());
        assert!(!cyclic_a3().is_acyclic());
        assert!(!a2tilde_gamma().is_acyclic());
        assert!(ExchangeMatrix::zero(4).is_acyclic());
        let (word, rep) = cyclic_a3().acyclic_representative(4).unwrap();
        assert_eq!(word.len(), 1);
        assert!(rep.is_acyclic());
    }

    #[test]
    fn classification() {
        let a3 = ExchangeMatrix::from_arrows(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(a3.classify(), QuiverClass::Dynkin { label: "A3".into() });
        assert_eq!(a2tilde_q().classify(), QuiverClass::AffineA { p: 2, q: 1 });
        let kron = ExchangeMatrix::from_arrows(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(kron.classify(), QuiverClass::Rank2 { arrows: 2 });
        let d4 = ExchangeMatrix::from_arrows(4, &[(0, 1, 1), (2, 1, 1), (3, 1, 1)]).unwrap();
        assert_eq!(d4.classify(), QuiverClass::Dynkin { label: "D4".into() });
        let e6 = ExchangeMatrix::from_arrows(6, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1)]).unwrap();
        assert_eq!(e6.classify(), QuiverClass::Dynkin { label: "E6".into() });
        let d4_tilde = ExchangeMatrix::from_arrows(5, &[(0, 4, 1), (1, 4, 1), (2, 4, 1), (3, 4, 1)]).unwrap();
        assert_eq!(d4_tilde.classify(), QuiverClass::OtherTame);
        let empty = ExchangeMatrix::zero(2);
        assert_eq!(empty.classify(), QuiverClass::Dynkin { label: "A1+A1".into() });
        let a4_tilde = ExchangeMatrix::from_arrows(4, &[(0, 1, 1), (2, 1, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        assert_eq!(a4_tilde.classify(), QuiverClass::AffineA { p: 2, q: 2 });
        let wild = ExchangeMatrix::from_arrows(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(wild.classify(), QuiverClass::Wild);
    }

    #[test]
    fn text_round_trip() {
        let text = "# gamma\n3\n2 1 1\n1 3 2 # double arrow\n3 2 1\n";
        let m = ExchangeMatrix::parse(text).unwrap();
        assert_eq!(m, a2tilde_gamma());
        assert_eq!(ExchangeMatrix::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn parse_errors() {
        assert!(ExchangeMatrix::parse("").is_err());
        assert!(ExchangeMatrix::parse("2\n1 3 1\n").is_err());
        assert!(ExchangeMatrix::parse("2\n1 1 1\n").is_err());
        assert!(ExchangeMatrix::parse("2\n1 2 1\n2 1 1\n").is_err());
        assert!(ExchangeMatrix::parse("2\n1 2\n").is_err());
        assert!(ExchangeMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = ExchangeMatrix::from_arrows(3, &[(0, 1, i64::MAX / 2), (1, 2, i64::MAX / 2)]).unwrap();
        assert_eq!(big.mutate(1), Err(Error::Overflow));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = ExchangeMatrix> {
            (1usize..6).prop_flat_map(|n| {
                proptest::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
                    let mut rows = vec![vec![0; n]; n];
                    let mut it = upper.into_iter();
                    for i in 0..n {
                        for j in i + 1..n {
                            let v = it.next().unwrap();
                            rows[i][j] = v;
                            rows[j][i] = -v;
                        }
                    }
                    ExchangeMatrix::from_rows(rows).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn involution_and_skew_symmetry(m in matrix(), k in 0usize..6) {
                let k = k % m.n();
                let once = m.mutate(k).unwrap();
                prop_assert!(once.validate().is_ok());
                prop_assert_eq!(once.mutate(k).unwrap(), m);
            }

            #[test]
            fn text_format_round_trips(m in matrix()) {
                prop_assert_eq!(ExchangeMatrix::parse(&m.to_text()).unwrap(), m);
            }
        }
    }
}
