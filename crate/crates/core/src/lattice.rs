//! The lattice of subpartitions of a finite set.
//!
//! A subpartition of `X` is a partition of some subset `X' ⊆ X`. Ordered by
//! refinement (every block of `P` lies inside a block of `Q`) these form a
//! lattice with zero element `∅` and top element `{X}`. The join-irreducible
//! elements are exactly the single-block subpartitions `{{x}}` and
//! `{{x, x'}}`, which is what makes the pairwise decompositions elsewhere in
//! this crate work.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::unionfind::DisjointSets;

/// Default bound on the size of the underlying set for
/// [`SubPartition::minimal_join_representations`].
pub const DEFAULT_MIN_REPS_GUARD: usize = 6;

/// Largest ground set accepted by [`enumerate_subpartitions`].
pub const ENUMERATION_GUARD: usize = 5;

const ABSENT: u32 = u32::MAX;

struct GroundInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// A nonempty finite set of named elements with a fixed canonical order.
///
/// Cloning is cheap; subpartitions share their ground set.
#[derive(Clone)]
pub struct GroundSet(Arc<GroundInner>);

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::invalid("ground set must be nonempty"));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate element name {name:?}")));
            }
        }
        Ok(GroundSet(Arc::new(GroundInner { names, index })))
    }

    /// Ground set `{x0, x1, ..., x(n-1)}`; handy for generated inputs.
    pub fn indexed(n: usize) -> GroundSet {
        GroundSet::new((0..n).map(|i| format!("x{i}"))).expect("n must be positive")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    /// Always false; ground sets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub(crate) fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::invalid(format!("{name:?} is not an element of the ground set")))
    }

    pub(crate) fn check_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch)
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for GroundSet {}

impl Hash for GroundSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.names.hash(state);
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// A partition of a subset of a [`GroundSet`].
///
/// Stored as one block label per ground element, with labels numbered in
/// order of first appearance. That numbering is canonical, so derived
/// equality coincides with equality of subpartitions.
#[derive(Clone)]
pub struct SubPartition {
    ground: GroundSet,
    labels: Vec<u32>,
}

impl PartialEq for SubPartition {
    fn eq(&self, other: &SubPartition) -> bool {
        self.labels == other.labels && self.ground == other.ground
    }
}

impl Eq for SubPartition {}

impl Hash for SubPartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl SubPartition {
    /// The zero element `∅`.
    pub fn empty(ground: &GroundSet) -> SubPartition {
        SubPartition {
            ground: ground.clone(),
            labels: vec![ABSENT; ground.len()],
        }
    }

    /// All singletons `{{x} : x ∈ X}`.
    pub fn discrete(ground: &GroundSet) -> SubPartition {
        SubPartition {
            ground: ground.clone(),
            labels: (0..ground.len() as u32).collect(),
        }
    }

    /// The top element `{X}`.
    pub fn whole(ground: &GroundSet) -> SubPartition {
        SubPartition {
            ground: ground.clone(),
            labels: vec![0; ground.len()],
        }
    }

    pub fn singleton(ground: &GroundSet, x: usize) -> SubPartition {
        let mut labels = vec![ABSENT; ground.len()];
        labels[x] = 0;
        SubPartition {
            ground: ground.clone(),
            labels,
        }
    }

    /// `{{x, y}}`, or `{{x}}` when `x == y`.
    pub fn pair(ground: &GroundSet, x: usize, y: usize) -> SubPartition {
        let mut labels = vec![ABSENT; ground.len()];
        labels[x] = 0;
        labels[y] = 0;
        SubPartition {
            ground: ground.clone(),
            labels,
        }
    }

    /// Builds a subpartition from blocks of element indices.
    pub fn from_blocks(ground: &GroundSet, blocks: &[Vec<usize>]) -> Result<SubPartition> {
        let mut raw = vec![None; ground.len()];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("blocks must be nonempty"));
            }
            for &x in block {
                if x >= ground.len() {
                    return Err(Error::invalid(format!("element index {x} out of range")));
                }
                if raw[x].is_some() {
                    return Err(Error::invalid(format!(
                        "element {:?} appears in more than one block",
                        ground.name(x)
                    )));
                }
                raw[x] = Some(b);
            }
        }
        Ok(SubPartition::from_labels(ground, &raw))
    }

    /// Builds a subpartition from blocks of element names.
    pub fn from_named_blocks<S: AsRef<str>>(
        ground: &GroundSet,
        blocks: &[Vec<S>],
    ) -> Result<SubPartition> {
        let indexed = blocks
            .iter()
            .map(|b| b.iter().map(|s| ground.lookup(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        SubPartition::from_blocks(ground, &indexed)
    }

    /// Builds a subpartition from arbitrary per-element labels (`None` means
    /// the element is not in the underlying set).
    pub fn from_labels<L: Copy + Eq + Hash>(ground: &GroundSet, raw: &[Option<L>]) -> SubPartition {
        assert_eq!(raw.len(), ground.len(), "one label per ground element");
        let mut seen: HashMap<L, u32> = HashMap::new();
        let labels = raw
            .iter()
            .map(|l| match l {
                None => ABSENT,
                Some(l) => {
                    let next = seen.len() as u32;
                    *seen.entry(*l).or_insert(next)
                }
            })
            .collect();
        SubPartition {
            ground: ground.clone(),
            labels,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Block label of `x`, or `None` when `x` is outside the underlying set.
    pub fn label(&self, x: usize) -> Option<usize> {
        match self.labels[x] {
            ABSENT => None,
            l => Some(l as usize),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.labels[x] != ABSENT
    }

    /// True iff `x ∼ y`; for `x == y` this is membership of `x`.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] != ABSENT && self.labels[x] == self.labels[y]
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .filter(|&&l| l != ABSENT)
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.iter().all(|&l| l == ABSENT)
    }

    /// True iff the blocks cover the whole ground set.
    pub fn is_partition(&self) -> bool {
        self.labels.iter().all(|&l| l != ABSENT)
    }

    /// Blocks in canonical order: by smallest member, members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            if l != ABSENT {
                blocks[l as usize].push(x);
            }
        }
        blocks
    }

    pub fn named_blocks(&self) -> Vec<Vec<String>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|x| self.ground.name(x).to_string()).collect())
            .collect()
    }

    /// `self ≤ other` in the refinement order.
    pub fn refines(&self, other: &SubPartition) -> Result<bool> {
        self.ground.check_same(&other.ground)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &SubPartition) -> bool {
        let mut image = vec![ABSENT; self.ground.len()];
        for (&mine, &theirs) in self.labels.iter().zip(&other.labels) {
            if mine == ABSENT {
                continue;
            }
            if theirs == ABSENT {
                return false;
            }
            let slot = &mut image[mine as usize];
            if *slot == ABSENT {
                *slot = theirs;
            } else if *slot != theirs {
                return false;
            }
        }
        true
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &SubPartition) -> Result<SubPartition> {
        self.ground.check_same(&other.ground)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &SubPartition) -> SubPartition {
        let n = self.labels.len();
        let mut ds = DisjointSets::new(n);
        // Each block is linked to its first member: a star graph per block.
        let mut first = vec![usize::MAX; n];
        for labels in [&self.labels, &other.labels] {
            first.iter_mut().for_each(|f| *f = usize::MAX);
            for (x, &l) in labels.iter().enumerate() {
                if l == ABSENT {
                    continue;
                }
                let f = &mut first[l as usize];
                if *f == usize::MAX {
                    *f = x;
                } else {
                    ds.union(*f, x);
                }
            }
        }
        let raw: Vec<Option<usize>> = (0..n)
            .map(|x| {
                (self.labels[x] != ABSENT || other.labels[x] != ABSENT).then(|| ds.find(x))
            })
            .collect();
        SubPartition::from_labels(&self.ground, &raw)
    }

    /// Coarsest common refinement.
    pub fn meet(&self, other: &SubPartition) -> Result<SubPartition> {
        self.ground.check_same(&other.ground)?;
        let raw: Vec<Option<(u32, u32)>> = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(&a, &b)| (a != ABSENT && b != ABSENT).then_some((a, b)))
            .collect();
        Ok(SubPartition::from_labels(&self.ground, &raw))
    }

    /// Join of a family; `∅` for an empty family.
    pub fn join_all<'a, I>(ground: &GroundSet, parts: I) -> Result<SubPartition>
    where
        I: IntoIterator<Item = &'a SubPartition>,
    {
        parts
            .into_iter()
            .try_fold(SubPartition::empty(ground), |acc, p| acc.join(p))
    }

    /// The singleton parts `{{x}}` and the doubleton parts `{{x, x'}}` with
    /// `x ∼ x'`, whose join is `self`.
    pub fn irreducible_parts(&self) -> Vec<SubPartition> {
        let n = self.labels.len();
        let mut parts: Vec<SubPartition> = (0..n)
            .filter(|&x| self.contains(x))
            .map(|x| SubPartition::singleton(&self.ground, x))
            .collect();
        for x in 0..n {
            for y in x + 1..n {
                if self.related(x, y) {
                    parts.push(SubPartition::pair(&self.ground, x, y));
                }
            }
        }
        parts
    }

    pub fn is_join_irreducible(&self) -> bool {
        let size = self.labels.iter().filter(|&&l| l != ABSENT).count();
        self.block_count() == 1 && size <= 2
    }

    /// All irredundant representations of `self` as a join of irreducible
    /// elements that are minimal for join-refinement, found by exhaustive
    /// search. Each representation is sorted; the list is sorted.
    pub fn minimal_join_representations(&self, guard: usize) -> Result<Vec<Vec<SubPartition>>> {
        let support = self.labels.iter().filter(|&&l| l != ABSENT).count();
        Error::guard("underlying set", support, guard)?;

        // A join of irreducibles equals `self` exactly when, block by block,
        // the irreducibles inside each block join to that block, so the
        // search factors over blocks.
        let mut product: Vec<Vec<SubPartition>> = vec![Vec::new()];
        for block in self.blocks() {
            let local = minimal_block_representations(block.len());
            let mut next = Vec::with_capacity(product.len() * local.len());
            for partial in &product {
                for rep in &local {
                    let mut combined = partial.clone();
                    combined.extend(rep.iter().map(|&(i, j)| {
                        SubPartition::pair(&self.ground, block[i], block[j])
                    }));
                    next.push(combined);
                }
            }
            product = next;
        }
        for rep in &mut product {
            rep.sort_by_key(|p| p.blocks());
        }
        product.sort_by_key(|rep| rep.iter().map(|p| p.blocks()).collect::<Vec<_>>());
        Ok(product)
    }

    /// `φ*P = {φ⁻¹(B) : B ∈ P}` over the source of `φ`.
    pub fn pullback(&self, phi: &Surjection) -> Result<SubPartition> {
        self.ground.check_same(&phi.target)?;
        Ok(self.pullback_unchecked(phi))
    }

    pub(crate) fn pullback_unchecked(&self, phi: &Surjection) -> SubPartition {
        let raw: Vec<Option<u32>> = phi
            .map
            .iter()
            .map(|&x| (self.labels[x] != ABSENT).then_some(self.labels[x]))
            .collect();
        SubPartition::from_labels(&phi.source, &raw)
    }
}

/// Irreducible elements below a block of size `k`, encoded as index pairs
/// `(i, j)` with `i <= j` (a singleton when `i == j`). Returns every
/// irredundant, join-refinement-minimal representation of the block.
fn minimal_block_representations(k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut atoms: Vec<(usize, usize)> = (0..k).map(|i| (i, i)).collect();
    for i in 0..k {
        for j in i + 1..k {
            atoms.push((i, j));
        }
    }
    let full = (1usize << k) - 1;
    let joins_to_block = |mask: u64| -> bool {
        let mut ds = DisjointSets::new(k);
        let mut covered = 0usize;
        for (a, &(i, j)) in atoms.iter().enumerate() {
            if mask >> a & 1 == 1 {
                covered |= 1 << i | 1 << j;
                ds.union(i, j);
            }
        }
        covered == full && (1..k).all(|i| ds.find(i) == ds.find(0))
    };

    let count = atoms.len();
    let mut irredundant: Vec<u64> = Vec::new();
    for mask in 1u64..(1u64 << count) {
        if !joins_to_block(mask) {
            continue;
        }
        // By monotonicity of joins it is enough to drop one element at a time.
        let redundant = (0..count)
            .filter(|a| mask >> a & 1 == 1)
            .any(|a| joins_to_block(mask & !(1 << a)));
        if !redundant {
            irredundant.push(mask);
        }
    }

    let below = |a: usize, b: usize| -> bool {
        let ((ai, aj), (bi, bj)) = (atoms[a], atoms[b]);
        if ai == aj {
            ai == bi || ai == bj
        } else {
            (ai, aj) == (bi, bj)
        }
    };
    let refines = |s: u64, t: u64| -> bool {
        (0..count)
            .filter(|a| s >> a & 1 == 1)
            .all(|a| (0..count).any(|b| t >> b & 1 == 1 && below(a, b)))
    };
    irredundant
        .iter()
        .filter(|&&s| {
            !irredundant
                .iter()
                .any(|&t| refines(t, s) && !refines(s, t))
        })
        .map(|&s| {
            (0..count)
                .filter(|a| s >> a & 1 == 1)
                .map(|a| atoms[a])
                .collect()
        })
        .collect()
}

impl fmt::Display for SubPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (i, &x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                f.write_str(self.ground.name(x))?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A surjection `φ: Z ↠ X` between ground sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    source: GroundSet,
    target: GroundSet,
    map: Vec<usize>,
}

impl Surjection {
    pub fn new(source: &GroundSet, target: &GroundSet, map: Vec<usize>) -> Result<Surjection> {
        if map.len() != source.len() {
            return Err(Error::invalid("surjection must assign every source element"));
        }
        let mut hit = vec![false; target.len()];
        for &x in &map {
            if x >= target.len() {
                return Err(Error::invalid(format!("target index {x} out of range")));
            }
            hit[x] = true;
        }
        if let Some(x) = hit.iter().position(|h| !h) {
            return Err(Error::invalid(format!(
                "map is not surjective: {:?} has no preimage",
                target.name(x)
            )));
        }
        Ok(Surjection {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(ground: &GroundSet) -> Surjection {
        Surjection {
            source: ground.clone(),
            target: ground.clone(),
            map: (0..ground.len()).collect(),
        }
    }

    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    pub fn apply(&self, z: usize) -> usize {
        self.map[z]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Every subpartition of `ground`, each exactly once.
pub fn enumerate_subpartitions(ground: &GroundSet) -> Result<Vec<SubPartition>> {
    Error::guard("ground set", ground.len(), ENUMERATION_GUARD)?;
    let n = ground.len();
    let mut out = Vec::new();
    let mut labels = vec![ABSENT; n];
    fn rec(
        ground: &GroundSet,
        x: usize,
        used: u32,
        labels: &mut Vec<u32>,
        out: &mut Vec<SubPartition>,
    ) {
        if x == labels.len() {
            out.push(SubPartition {
                ground: ground.clone(),
                labels: labels.clone(),
            });
            return;
        }
        labels[x] = ABSENT;
        rec(ground, x + 1, used, labels, out);
        for l in 0..=used {
            labels[x] = l;
            rec(ground, x + 1, used.max(l + 1), labels, out);
        }
    }
    rec(ground, 0, 0, &mut labels, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> GroundSet {
        GroundSet::new(["x", "y", "z"]).unwrap()
    }

    fn sp(g: &GroundSet, blocks: &[&[&str]]) -> SubPartition {
        let blocks: Vec<Vec<&str>> = blocks.iter().map(|b| b.to_vec()).collect();
        SubPartition::from_named_blocks(g, &blocks).unwrap()
    }

    #[test]
    fn ground_set_rejects_duplicates_and_empty() {
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(GroundSet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn refinement_examples() {
        let g = xyz();
        let e = SubPartition::empty(&g);
        assert!(e.refines(&sp(&g, &[&["x", "z"]])).unwrap());
        assert!(sp(&g, &[&["x"], &["y"]]).refines(&sp(&g, &[&["x", "y"]])).unwrap());
        assert!(!sp(&g, &[&["x", "y"]]).refines(&sp(&g, &[&["y", "z"]])).unwrap());
    }

    #[test]
    fn join_and_meet_examples() {
        let g = xyz();
        let xy = sp(&g, &[&["x", "y"]]);
        let yz = sp(&g, &[&["y", "z"]]);
        assert_eq!(xy.join(&yz).unwrap(), SubPartition::whole(&g));
        assert_eq!(xy.meet(&yz).unwrap(), sp(&g, &[&["y"]]));
        let d = SubPartition::discrete(&g);
        assert_eq!(SubPartition::whole(&g).meet(&d).unwrap(), d);
        assert_eq!(xy.join(&SubPartition::empty(&g)).unwrap(), xy);
    }

    #[test]
    fn mismatched_ground_sets_are_rejected() {
        let g = xyz();
        let h = GroundSet::new(["x", "y"]).unwrap();
        let err = SubPartition::empty(&g).join(&SubPartition::empty(&h)).unwrap_err();
        assert_eq!(err, Error::GroundSetMismatch);
    }

    #[test]
    fn canonical_form_ignores_input_order() {
        let g = xyz();
        assert_eq!(sp(&g, &[&["z"], &["y", "x"]]), sp(&g, &[&["x", "y"], &["z"]]));
        assert_eq!(sp(&g, &[&["z"], &["y", "x"]]).to_string(), "{{x,y},{z}}");
    }

    #[test]
    fn irreducible_parts_of_pair() {
        let g = xyz();
        let parts = sp(&g, &[&["x", "y"]]).irreducible_parts();
        assert_eq!(
            parts,
            vec![sp(&g, &[&["x"]]), sp(&g, &[&["y"]]), sp(&g, &[&["x", "y"]])]
        );
        assert!(SubPartition::empty(&g).irreducible_parts().is_empty());
    }

    #[test]
    fn join_irreducibility() {
        let g = xyz();
        assert!(sp(&g, &[&["x"]]).is_join_irreducible());
        assert!(sp(&g, &[&["x", "y"]]).is_join_irreducible());
        assert!(!sp(&g, &[&["x"], &["y"]]).is_join_irreducible());
        assert!(!SubPartition::empty(&g).is_join_irreducible());
        assert!(!SubPartition::whole(&g).is_join_irreducible());
    }

    #[test]
    fn triangle_has_three_minimal_representations() {
        let g = xyz();
        let reps = SubPartition::whole(&g).minimal_join_representations(6).unwrap();
        assert_eq!(reps.len(), 3);
        for rep in &reps {
            assert_eq!(rep.len(), 2);
            assert_eq!(SubPartition::join_all(&g, rep).unwrap(), SubPartition::whole(&g));
        }
        let single = sp(&g, &[&["x"]]);
        assert_eq!(
            single.minimal_join_representations(6).unwrap(),
            vec![vec![single.clone()]]
        );
        assert_eq!(
            SubPartition::empty(&g).minimal_join_representations(6).unwrap(),
            vec![Vec::<SubPartition>::new()]
        );
    }

    #[test]
    fn min_reps_guard() {
        let g = GroundSet::indexed(7);
        let err = SubPartition::whole(&g).minimal_join_representations(6).unwrap_err();
        assert_eq!(err.kind(), crate::error::ErrorKind::Guard);
    }

    #[test]
    fn enumeration_counts() {
        for (n, count) in [(1, 2), (2, 5), (3, 15), (4, 52)] {
            let all = enumerate_subpartitions(&GroundSet::indexed(n)).unwrap();
            assert_eq!(all.len(), count);
            let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), count);
        }
        assert!(enumerate_subpartitions(&GroundSet::indexed(6)).is_err());
    }

    #[test]
    fn pullback_examples() {
        let x = GroundSet::new(["x", "y"]).unwrap();
        let z = GroundSet::new(["z1", "z2", "z3"]).unwrap();
        let phi = Surjection::new(&z, &x, vec![0, 0, 1]).unwrap();
        let p = SubPartition::whole(&x);
        assert_eq!(p.pullback(&phi).unwrap(), SubPartition::whole(&z));
        assert!(SubPartition::empty(&x).pullback(&phi).unwrap().is_empty());
        let id = Surjection::identity(&x);
        let d = SubPartition::discrete(&x);
        assert_eq!(d.pullback(&id).unwrap(), d);
        assert!(Surjection::new(&z, &x, vec![0, 0, 0]).is_err());
    }

    fn arb_subpartition(n: usize) -> impl Strategy<Value = SubPartition> {
        proptest::collection::vec(proptest::option::of(0u8..4), n).prop_map(move |raw| {
            SubPartition::from_labels(&GroundSet::indexed(n), &raw)
        })
    }

    proptest! {
        #[test]
        fn lattice_laws(p in arb_subpartition(5), q in arb_subpartition(5), r in arb_subpartition(5)) {
            prop_assert_eq!(p.join(&q).unwrap(), q.join(&p).unwrap());
            prop_assert_eq!(p.meet(&q).unwrap(), q.meet(&p).unwrap());
            prop_assert_eq!(
                p.join(&q).unwrap().join(&r).unwrap(),
                p.join(&q.join(&r).unwrap()).unwrap()
            );
            prop_assert_eq!(
                p.meet(&q).unwrap().meet(&r).unwrap(),
                p.meet(&q.meet(&r).unwrap()).unwrap()
            );
            prop_assert_eq!(p.join(&p.meet(&q).unwrap()).unwrap(), p.clone());
            prop_assert_eq!(p.meet(&p.join(&q).unwrap()).unwrap(), p.clone());
            prop_assert!(p.refines(&p.join(&q).unwrap()).unwrap());
            prop_assert!(p.meet(&q).unwrap().refines(&q).unwrap());
        }

        #[test]
        fn parts_join_back(p in arb_subpartition(6)) {
            let parts = p.irreducible_parts();
            prop_assert!(parts.iter().all(|part| part.is_join_irreducible()));
            prop_assert_eq!(SubPartition::join_all(p.ground(), &parts).unwrap(), p);
        }

        #[test]
        fn refinement_is_a_partial_order(p in arb_subpartition(4), q in arb_subpartition(4), r in arb_subpartition(4)) {
            prop_assert!(p.refines(&p).unwrap());
            if p.refines(&q).unwrap() && q.refines(&p).unwrap() {
                prop_assert_eq!(&p, &q);
            }
            if p.refines(&q).unwrap() && q.refines(&r).unwrap() {
                prop_assert!(p.refines(&r).unwrap());
            }
        }
    }
}
