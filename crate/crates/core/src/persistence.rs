//! Barcodes, their rank invariants, the erosion distance and the
//! bottleneck distance.

use std::fmt;

use crate::error::{Error, Result};
use crate::filtration::RFiltration;
use crate::rational::{Ext, ExtDist, Rat};
use crate::staircase::{Ambient, Generator, Staircase};
use crate::unionfind::DisjointSets;

/// A bar `[birth, death)`; `death` may be `+∞`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bar {
    birth: Rat,
    death: Ext,
}

impl Bar {
    pub fn new(birth: Rat, death: Ext) -> Result<Bar> {
        if death < Ext::Fin(birth.clone()) {
            return Err(Error::invalid(format!("bar dies at {death} before birth at {birth}")));
        }
        Ok(Bar { birth, death })
    }

    pub fn finite(birth: Rat, death: Rat) -> Result<Bar> {
        Bar::new(birth, Ext::Fin(death))
    }

    pub fn infinite(birth: Rat) -> Bar {
        Bar {
            birth,
            death: Ext::PosInf,
        }
    }

    pub fn birth(&self) -> &Rat {
        &self.birth
    }

    pub fn death(&self) -> &Ext {
        &self.death
    }

    /// Half the length, i.e. the cost of matching the bar to the diagonal.
    pub fn half_length(&self) -> ExtDist {
        ExtDist::between(&self.death, &Ext::Fin(self.birth.clone())).half()
    }

    /// `max(|b - b'|, |d - d'|)`.
    pub fn cost(&self, other: &Bar) -> ExtDist {
        ExtDist::from((self.birth.clone() - &other.birth).abs())
            .max(ExtDist::between(&self.death, &other.death))
    }
}

impl fmt::Debug for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.birth, self.death)
    }
}

/// A multiset of bars, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Barcode {
    bars: Vec<Bar>,
}

impl Barcode {
    pub fn new(mut bars: Vec<Bar>) -> Barcode {
        bars.sort();
        Barcode { bars }
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// `#{bars [p, q) with p ≤ a and b ≤ q}` for `a < b`.
    pub fn rank(&self, a: &Rat, b: &Rat) -> Result<usize> {
        if a >= b {
            return Err(Error::EmptyInterval {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        let b = Ext::Fin(b.clone());
        Ok(self
            .bars
            .iter()
            .filter(|bar| &bar.birth <= a && bar.death >= b)
            .count())
    }

    /// `{(a, b) : a < b, rank(a, b) ≤ n}` as a staircase over the
    /// interval poset.
    ///
    /// The rank is constant on cells `[p_i, p_{i+1}) × (q_j, q_{j+1}]`
    /// cut out by the distinct births and finite deaths, and each cell
    /// meeting `a < b` contributes one generator.
    pub fn sublevel_staircase(&self, n: usize) -> Staircase {
        let mut births: Vec<&Rat> = self.bars.iter().map(|b| &b.birth).collect();
        births.dedup();
        let mut deaths: Vec<&Rat> = self.bars.iter().filter_map(|b| b.death.fin()).collect();
        deaths.sort();
        deaths.dedup();

        let fin = |r: &Rat| Ext::Fin(r.clone());
        let mut gens = Vec::new();
        for i in 0..=births.len() {
            let inf_a = if i == 0 { Ext::NegInf } else { fin(births[i - 1]) };
            let sup_a = births.get(i).map_or(Ext::PosInf, |r| fin(r));
            for j in 0..=deaths.len() {
                let inf_b = if j == 0 { Ext::NegInf } else { fin(deaths[j - 1]) };
                let sup_b = deaths.get(j).map_or(Ext::PosInf, |r| fin(r));
                if inf_a >= sup_b {
                    continue;
                }
                let rank = self
                    .bars
                    .iter()
                    .filter(|bar| fin(&bar.birth) <= inf_a && bar.death >= sup_b)
                    .count();
                if rank <= n {
                    let l = sup_a.clone().min(sup_b.clone());
                    let r = inf_a.clone().max(inf_b);
                    gens.push(Generator::new(l, r).expect("cell corner is admissible"));
                }
            }
        }
        Staircase::normalize(gens, Ambient::Int)
    }

    /// `sup_n d_H(sublevel_n(self), sublevel_n(other))`.
    pub fn erosion(&self, other: &Barcode) -> ExtDist {
        let top = self.len().max(other.len());
        ExtDist::max_of((0..top).map(|n| {
            self.sublevel_staircase(n)
                .hausdorff(&other.sublevel_staircase(n))
                .expect("both staircases live over the interval poset")
        }))
    }

    /// The bottleneck distance, where unmatched bars pay half their length.
    pub fn bottleneck(&self, other: &Barcode) -> ExtDist {
        let infinite = |c: &Barcode| c.bars.iter().filter(|b| !b.death.is_finite()).count();
        if infinite(self) != infinite(other) {
            return ExtDist::Infinite;
        }
        let mut candidates: Vec<Rat> = self
            .bars
            .iter()
            .chain(&other.bars)
            .filter_map(|b| b.half_length().finite().cloned())
            .collect();
        for a in &self.bars {
            for b in &other.bars {
                if let ExtDist::Finite(c) = a.cost(b) {
                    candidates.push(c);
                }
            }
        }
        candidates.push(Rat::zero());
        candidates.sort();
        candidates.dedup();

        let (mut lo, mut hi) = (0, candidates.len() - 1);
        if !self.matchable_within(other, &candidates[hi]) {
            return ExtDist::Infinite;
        }
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.matchable_within(other, &candidates[mid]) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        ExtDist::Finite(candidates[lo].clone())
    }

    /// Whether a partial matching of cost at most `delta` exists.
    ///
    /// Bars of `self` are left vertices `0..n1` and diagonal copies of bars
    /// of `other` are `n1..n1+n2`; symmetrically on the right. A perfect
    /// matching in this bipartite graph is a partial matching of bars.
    fn matchable_within(&self, other: &Barcode, delta: &Rat) -> bool {
        let (n1, n2) = (self.len(), other.len());
        let within = |d: ExtDist| d <= *delta;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n1 + n2];
        for (i, a) in self.bars.iter().enumerate() {
            for (j, b) in other.bars.iter().enumerate() {
                if within(a.cost(b)) {
                    adj[i].push(j);
                }
            }
            if within(a.half_length()) {
                adj[i].push(n2 + i);
            }
        }
        for (j, b) in other.bars.iter().enumerate() {
            if within(b.half_length()) {
                adj[n1 + j].push(j);
            }
            adj[n1 + j].extend(n2..n2 + n1);
        }
        perfect_matching(&adj, n1 + n2)
    }
}

/// Kuhn's augmenting path algorithm on a square bipartite graph.
fn perfect_matching(adj: &[Vec<usize>], n: usize) -> bool {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; n];
    (0..n).all(|u| augment(u, adj, &mut vec![false; n], &mut owner))
}

/// Degree-zero persistent homology of a filtration by the elder rule.
/// Bars of length zero are omitted.
pub fn h0_barcode(f: &RFiltration) -> Result<Barcode> {
    f.validate()?;
    let n = f.ground().len();
    let mut vertex_birth: Vec<Option<Rat>> = vec![None; n];
    let mut edges: Vec<(Rat, usize, usize)> = Vec::new();
    for (verts, birth) in f.simplices() {
        match verts.as_slice() {
            [v] => vertex_birth[*v] = Some(birth.clone()),
            [u, v] => edges.push((birth.clone(), *u, *v)),
            _ => {}
        }
    }
    edges.sort();

    let mut sets = DisjointSets::new(n);
    // Oldest vertex of each component, keyed by its root.
    let mut elder: Vec<usize> = (0..n).collect();
    let age = |v: usize| (vertex_birth[v].clone(), v);
    let mut bars = Vec::new();
    for (t, u, v) in edges {
        let (ru, rv) = (sets.find(u), sets.find(v));
        if ru == rv {
            continue;
        }
        let (eu, ev) = (elder[ru], elder[rv]);
        let (old, young) = if age(eu) <= age(ev) { (eu, ev) } else { (ev, eu) };
        let born = vertex_birth[young].clone().expect("validated filtration");
        if born < t {
            bars.push(Bar::finite(born, t.clone())?);
        }
        sets.union(ru, rv);
        let root = sets.find(u);
        elder[root] = old;
    }
    for v in 0..n {
        if sets.find(v) == v {
            if let Some(b) = &vertex_birth[elder[v]] {
                bars.push(Bar::infinite(b.clone()));
            }
        }
    }
    Ok(Barcode::new(bars))
}
