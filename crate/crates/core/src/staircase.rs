//! Staircase-shaped upper sets and their Hausdorff distance.
//!
//! A [`Staircase`] is a finite union of closed regions `{a ≤ l, b ≥ r}`,
//! either inside the interval poset `Int = {(a, b) : a < b}` (clamped to
//! `a ≤ b`) or in the plane. Plane points `(x, y)` with the product order
//! are stored through the flip `a = -x`, `b = y`, so that the upper set
//! `{x ≥ p, y ≥ q}` becomes the region with `l = -p`, `r = q` and a single
//! engine serves both ambients.
//!
//! The flow moves `(a, b)` to `(a - ε, b + ε)`, which keeps `c = a + b`
//! fixed. Along each flow line `a + b = c` an upper set is a ray
//! `b ≥ g(c)`; the function `g` is the entry [`Profile`], and the Hausdorff
//! (interleaving) distance between two staircases is `sup_c |g_U - g_V|`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{Ext, ExtDist, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// The interval poset, clamped to the closed half-plane `a ≤ b`.
    Int,
    /// The plane with the product order.
    Plane,
}

impl Ambient {
    fn clamped(self) -> bool {
        self == Ambient::Int
    }
}

/// The closed region `{(a, b) : a ≤ l, b ≥ r}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    l: Ext,
    r: Ext,
}

impl Generator {
    /// `l` may not be `-inf` and `r` may not be `+inf`.
    pub fn new(l: Ext, r: Ext) -> Result<Generator> {
        if l == Ext::NegInf || r == Ext::PosInf {
            return Err(Error::invalid(format!(
                "generator ({l}, {r}) denotes an empty region"
            )));
        }
        Ok(Generator { l, r })
    }

    pub fn finite(l: Rat, r: Rat) -> Generator {
        Generator {
            l: Ext::Fin(l),
            r: Ext::Fin(r),
        }
    }

    /// The whole ambient, `(+inf, -inf)`.
    pub fn everything() -> Generator {
        Generator {
            l: Ext::PosInf,
            r: Ext::NegInf,
        }
    }

    /// The plane quadrant `{x ≥ p, y ≥ q}`.
    pub fn corner(p: Ext, q: Ext) -> Result<Generator> {
        Generator::new(p.neg(), q)
    }

    pub fn l(&self) -> &Ext {
        &self.l
    }

    pub fn r(&self) -> &Ext {
        &self.r
    }

    /// The plane corner `(p, q)` of this generator.
    pub fn to_corner(&self) -> (Ext, Ext) {
        (self.l.neg(), self.r.clone())
    }

    fn contains(&self, a: &Rat, b: &Rat) -> bool {
        Ext::Fin(a.clone()) <= self.l && Ext::Fin(b.clone()) >= self.r
    }

    fn shifted(&self, eps: &Rat) -> Generator {
        Generator {
            l: self.l.shift(eps),
            r: self.r.shift(&-eps),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l, self.r)
    }
}

/// A finitely generated closed upper set.
///
/// Generators are kept as an antichain sorted by strictly increasing `l`
/// (and therefore strictly increasing `r`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    ambient: Ambient,
    gens: Vec<Generator>,
}

impl Staircase {
    /// Reduces `gens` to the canonical antichain describing their union.
    pub fn normalize(gens: Vec<Generator>, ambient: Ambient) -> Staircase {
        let mut gens = gens;
        // Sweep by decreasing l; a generator survives iff its r is below
        // every r seen so far (ties in l resolved towards the smaller r).
        gens.sort_by(|x, y| y.l.cmp(&x.l).then_with(|| x.r.cmp(&y.r)));
        let mut kept: Vec<Generator> = Vec::with_capacity(gens.len());
        for g in gens {
            match kept.last() {
                Some(last) if g.r >= last.r => {}
                _ => kept.push(g),
            }
        }
        kept.reverse();
        let swept = Staircase {
            ambient,
            gens: kept,
        };
        if !ambient.clamped() {
            return swept;
        }
        // Regions touching the diagonal can jointly cover a region that no
        // single generator dominates; rebuilding from the profile gives the
        // canonical antichain.
        Staircase {
            ambient,
            gens: generators_from_clamped(&swept.profile()),
        }
    }

    pub fn empty(ambient: Ambient) -> Staircase {
        Staircase {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn full(ambient: Ambient) -> Staircase {
        Staircase {
            ambient,
            gens: vec![Generator::everything()],
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.gens.len() == 1 && self.gens[0] == Generator::everything()
    }

    /// Membership of `(a, b)` in internal coordinates. For the plane these
    /// are `(-x, y)`; see [`Staircase::contains_point`].
    pub fn contains(&self, a: &Rat, b: &Rat) -> Result<bool> {
        if self.ambient.clamped() && a >= b {
            return Err(Error::PointOutsideAmbient {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(self.gens.iter().any(|g| g.contains(a, b)))
    }

    /// Membership of the plane point `(x, y)`.
    pub fn contains_point(&self, x: &Rat, y: &Rat) -> Result<bool> {
        if self.ambient != Ambient::Plane {
            return Err(Error::AmbientMismatch);
        }
        self.contains(&-x, y)
    }

    fn check_ambient(&self, other: &Staircase) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// The entry profile `g(c) = min_i max(r_i, c - l_i [, c/2])`.
    pub fn profile(&self) -> Profile {
        let raw = self.unclamped_profile();
        if !self.ambient.clamped() {
            return raw;
        }
        let diagonal = PiecewiseLinear::line(Rat::zero(), Rat::zero(), Rat::new(1, 2));
        match raw {
            Profile::Empty => Profile::Empty,
            Profile::Full => Profile::Finite(diagonal),
            Profile::Finite(f) => Profile::Finite(f.max(&diagonal)),
        }
    }

    fn unclamped_profile(&self) -> Profile {
        if self.gens.is_empty() {
            return Profile::Empty;
        }
        if self.is_full() {
            return Profile::Full;
        }
        let k = self.gens.len();
        let mut points = Vec::with_capacity(2 * k);
        for (i, g) in self.gens.iter().enumerate() {
            if let (Ext::Fin(l), Ext::Fin(r)) = (&g.l, &g.r) {
                points.push((l + r, r.clone()));
            }
            if i + 1 < k {
                if let (Ext::Fin(l), Ext::Fin(r)) = (&g.l, &self.gens[i + 1].r) {
                    points.push((l + r, r.clone()));
                }
            }
        }
        let left = if self.gens[0].r == Ext::NegInf {
            Rat::one()
        } else {
            Rat::zero()
        };
        let right = if self.gens[k - 1].l == Ext::PosInf {
            Rat::zero()
        } else {
            Rat::one()
        };
        if points.is_empty() {
            // A single strip: either b ≥ r or a ≤ l.
            let g = &self.gens[0];
            let y = match (&g.l, &g.r) {
                (Ext::Fin(l), _) => -l,
                (_, Ext::Fin(r)) => r.clone(),
                _ => unreachable!("the full generator is handled above"),
            };
            points.push((Rat::zero(), y));
        }
        Profile::Finite(PiecewiseLinear::new(points, left, right))
    }

    /// Flows every generator by `ε`: `(l, r) ↦ (l + ε, r - ε)`.
    pub fn thicken(&self, eps: &Rat) -> Result<Staircase> {
        if eps.is_negative() {
            return Err(Error::NegativeEpsilon);
        }
        Ok(Staircase::normalize(
            self.gens.iter().map(|g| g.shifted(eps)).collect(),
            self.ambient,
        ))
    }

    /// `self ⊆ other`.
    pub fn subset(&self, other: &Staircase) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.profile().above(&other.profile()))
    }

    /// Whether `self` and `other` are `ε`-interleaved.
    pub fn interleaved(&self, other: &Staircase, eps: &Rat) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.subset(&other.thicken(eps)?)? && other.subset(&self.thicken(eps)?)?)
    }

    /// Hausdorff distance along flow lines, `sup_c |g_U(c) - g_V(c)|`.
    pub fn hausdorff(&self, other: &Staircase) -> Result<ExtDist> {
        self.check_ambient(other)?;
        Ok(self.profile().distance(&other.profile()))
    }
}

/// Reads generators off a clamped profile. Walking left to right, a flat
/// piece at height `r` opens a generator, which the next slope-1 piece (the
/// vertical edge `a = l`) closes; slope-½ pieces run along the diagonal and
/// neither open nor close one.
fn generators_from_clamped(profile: &Profile) -> Vec<Generator> {
    let f = match profile {
        Profile::Empty => return Vec::new(),
        Profile::Full => return vec![Generator::everything()],
        Profile::Finite(f) => f,
    };
    let pts = &f.points;
    let mut segments: Vec<(Rat, &(Rat, Rat))> = Vec::with_capacity(pts.len() + 1);
    segments.push((f.left.clone(), &pts[0]));
    for w in pts.windows(2) {
        segments.push((slope(&w[0], &w[1]), &w[0]));
    }
    segments.push((f.right.clone(), &pts[pts.len() - 1]));

    let mut gens = Vec::new();
    let mut open = if f.left.is_zero() {
        None
    } else {
        Some(Ext::NegInf)
    };
    for (s, (x, y)) in segments {
        if s.is_zero() {
            open = Some(Ext::Fin(y.clone()));
        } else if s == Rat::one() {
            if let Some(r) = open.take() {
                gens.push(Generator {
                    l: Ext::Fin(x - y),
                    r,
                });
            }
        }
    }
    if let Some(r) = open {
        gens.push(Generator { l: Ext::PosInf, r });
    }
    gens
}

impl fmt::Debug for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.ambient, self.gens)
    }
}

/// Entry profile of a staircase along the flow lines `a + b = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Profile {
    /// `g ≡ +inf`: the staircase is empty.
    Empty,
    /// `g ≡ -inf`: the staircase is the whole plane.
    Full,
    Finite(PiecewiseLinear),
}

impl Profile {
    pub fn eval(&self, c: &Rat) -> Ext {
        match self {
            Profile::Empty => Ext::PosInf,
            Profile::Full => Ext::NegInf,
            Profile::Finite(f) => Ext::Fin(f.eval(c)),
        }
    }

    /// `g_self ≥ g_other` everywhere, i.e. the staircase of `self` is
    /// contained in that of `other`.
    fn above(&self, other: &Profile) -> bool {
        match (self, other) {
            (Profile::Empty, _) => true,
            (_, Profile::Empty) => false,
            (_, Profile::Full) => true,
            (Profile::Full, _) => false,
            (Profile::Finite(f), Profile::Finite(g)) => {
                g.left >= f.left
                    && g.right <= f.right
                    && merged_abscissae(f, g).iter().all(|c| g.eval(c) <= f.eval(c))
            }
        }
    }

    fn distance(&self, other: &Profile) -> ExtDist {
        match (self, other) {
            (Profile::Empty, Profile::Empty) | (Profile::Full, Profile::Full) => ExtDist::zero(),
            (Profile::Finite(f), Profile::Finite(g)) => {
                if f.left != g.left || f.right != g.right {
                    return ExtDist::Infinite;
                }
                let sup = merged_abscissae(f, g)
                    .iter()
                    .map(|c| (f.eval(c) - g.eval(c)).abs())
                    .max()
                    .unwrap_or_else(Rat::zero);
                ExtDist::Finite(sup)
            }
            _ => ExtDist::Infinite,
        }
    }

    /// Abscissae where the slope changes.
    pub fn breakpoints(&self) -> Vec<Rat> {
        match self {
            Profile::Finite(f) => f.breakpoints(),
            _ => Vec::new(),
        }
    }

    /// One `(slope, value at the left end)` entry per piece between
    /// consecutive breakpoints, starting from `-inf`.
    pub fn pieces(&self) -> Vec<(Rat, Ext)> {
        match self {
            Profile::Empty => vec![(Rat::zero(), Ext::PosInf)],
            Profile::Full => vec![(Rat::zero(), Ext::NegInf)],
            Profile::Finite(f) => f.pieces(),
        }
    }
}

/// A continuous piecewise-linear function with finitely many vertices and
/// affine tails.
#[derive(Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    points: Vec<(Rat, Rat)>,
    left: Rat,
    right: Rat,
}

impl fmt::Debug for PiecewiseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<slope {}> ", self.left)?;
        for (x, y) in &self.points {
            write!(f, "({x}, {y}) ")?;
        }
        write!(f, "<slope {}>", self.right)
    }
}

fn slope(p: &(Rat, Rat), q: &(Rat, Rat)) -> Rat {
    (&q.1 - &p.1) / (&q.0 - &p.0)
}

fn merged_abscissae(f: &PiecewiseLinear, g: &PiecewiseLinear) -> Vec<Rat> {
    let mut xs: Vec<Rat> = f
        .points
        .iter()
        .chain(&g.points)
        .map(|(x, _)| x.clone())
        .collect();
    xs.sort();
    xs.dedup();
    xs
}

impl PiecewiseLinear {
    /// `points` must have strictly increasing abscissae and be nonempty.
    pub(crate) fn new(points: Vec<(Rat, Rat)>, left: Rat, right: Rat) -> PiecewiseLinear {
        debug_assert!(!points.is_empty());
        debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));
        let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 && slope(&out[out.len() - 2], &out[out.len() - 1]) == slope(&out[out.len() - 1], &p) {
                out.pop();
            }
            out.push(p);
        }
        while out.len() >= 2 && slope(&out[0], &out[1]) == left {
            out.remove(0);
        }
        while out.len() >= 2 && slope(&out[out.len() - 2], &out[out.len() - 1]) == right {
            out.pop();
        }
        PiecewiseLinear {
            points: out,
            left,
            right,
        }
    }

    /// The line through `(x, y)` with the given slope.
    pub(crate) fn line(x: Rat, y: Rat, slope: Rat) -> PiecewiseLinear {
        PiecewiseLinear {
            points: vec![(x, y)],
            left: slope.clone(),
            right: slope,
        }
    }

    pub fn points(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    pub fn left_slope(&self) -> &Rat {
        &self.left
    }

    pub fn right_slope(&self) -> &Rat {
        &self.right
    }

    pub fn eval(&self, c: &Rat) -> Rat {
        let first = &self.points[0];
        if c <= &first.0 {
            return &first.1 + &self.left * (c - &first.0);
        }
        let last = &self.points[self.points.len() - 1];
        if c >= &last.0 {
            return &last.1 + &self.right * (c - &last.0);
        }
        let k = self.points.partition_point(|(x, _)| x <= c);
        let (p, q) = (&self.points[k - 1], &self.points[k]);
        &p.1 + slope(p, q) * (c - &p.0)
    }

    /// Slope of the piece immediately to the left of vertex `i`.
    fn slope_before(&self, i: usize) -> Rat {
        if i == 0 {
            self.left.clone()
        } else {
            slope(&self.points[i - 1], &self.points[i])
        }
    }

    fn breakpoints(&self) -> Vec<Rat> {
        if self.points.len() == 1 && self.left == self.right {
            return Vec::new();
        }
        self.points.iter().map(|(x, _)| x.clone()).collect()
    }

    fn pieces(&self) -> Vec<(Rat, Ext)> {
        let tail_start = |s: &Rat, y: &Rat| {
            if s.is_zero() {
                Ext::Fin(y.clone())
            } else {
                Ext::NegInf
            }
        };
        let first = &self.points[0];
        if self.breakpoints().is_empty() {
            return vec![(self.left.clone(), tail_start(&self.left, &first.1))];
        }
        let mut out = vec![(self.left.clone(), tail_start(&self.left, &first.1))];
        for i in 1..self.points.len() {
            out.push((self.slope_before(i), Ext::Fin(self.points[i - 1].1.clone())));
        }
        let last = &self.points[self.points.len() - 1];
        out.push((self.right.clone(), Ext::Fin(last.1.clone())));
        out
    }

    /// Pointwise maximum.
    pub(crate) fn max(&self, other: &PiecewiseLinear) -> PiecewiseLinear {
        let mut xs = merged_abscissae(self, other);
        let diff = |c: &Rat| self.eval(c) - other.eval(c);
        let mut extra = Vec::new();
        for w in xs.windows(2) {
            let (d0, d1) = (diff(&w[0]), diff(&w[1]));
            if d0.signum() * d1.signum() < 0 {
                extra.push(&w[0] + (&w[1] - &w[0]) * &d0 / (&d0 - &d1));
            }
        }
        let first = xs[0].clone();
        let last = xs[xs.len() - 1].clone();
        let d_first = diff(&first);
        let s_left = &self.left - &other.left;
        if !s_left.is_zero() {
            let root = &first - &d_first / &s_left;
            if root < first {
                extra.push(root);
            }
        }
        let d_last = diff(&last);
        let s_right = &self.right - &other.right;
        if !s_right.is_zero() {
            let root = &last - &d_last / &s_right;
            if root > last {
                extra.push(root);
            }
        }
        xs.extend(extra);
        xs.sort();
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|c| {
                let y = self.eval(&c).max(other.eval(&c));
                (c, y)
            })
            .collect();
        let left = self.left.clone().min(other.left.clone());
        let right = self.right.clone().max(other.right.clone());
        PiecewiseLinear::new(points, left, right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn fin(n: i64) -> Ext {
        Ext::Fin(Rat::int(n))
    }

    fn gen(l: Ext, r: Ext) -> Generator {
        Generator::new(l, r).unwrap()
    }

    fn loop_staircase(delta: &Rat) -> Staircase {
        Staircase::normalize(
            vec![
                gen(Ext::Fin(-delta), Ext::NegInf),
                gen(Ext::PosInf, Ext::Fin(delta.clone())),
            ],
            Ambient::Int,
        )
    }

    #[test]
    fn normalize_removes_dominated() {
        let s = Staircase::normalize(
            vec![Generator::finite(r(2), r(1)), Generator::finite(r(3), r(0))],
            Ambient::Int,
        );
        assert_eq!(s.generators(), &[Generator::finite(r(3), r(0))]);
        let s = Staircase::normalize(
            vec![Generator::everything(), Generator::finite(r(1), r(2))],
            Ambient::Int,
        );
        assert!(s.is_full());
        assert!(Staircase::normalize(vec![], Ambient::Int).is_empty());
        let s = Staircase::normalize(
            vec![
                Generator::finite(r(5), r(4)),
                Generator::finite(r(1), r(0)),
                Generator::finite(r(5), r(4)),
            ],
            Ambient::Plane,
        );
        assert_eq!(s.generators().len(), 2);
        assert!(s.generators()[0].l() < s.generators()[1].l());
    }

    #[test]
    fn diagonal_touching_generators_can_cover_everything() {
        let d = Rat::new(3, 2);
        let s = Staircase::normalize(
            vec![
                gen(Ext::Fin(-&d), Ext::NegInf),
                Generator::finite(d.clone(), -&d),
                gen(Ext::PosInf, Ext::Fin(d.clone())),
            ],
            Ambient::Int,
        );
        assert!(s.is_full());
        let s = Staircase::normalize(
            vec![Generator::finite(r(4), r(1)), Generator::finite(r(6), r(3))],
            Ambient::Int,
        );
        assert_eq!(s.generators(), &[Generator::finite(r(6), r(1))]);
    }

    #[test]
    fn membership() {
        let s = Staircase::normalize(vec![Generator::finite(r(1), r(3))], Ambient::Int);
        assert!(s.contains(&r(0), &r(4)).unwrap());
        assert!(!s.contains(&r(2), &r(4)).unwrap());
        assert!(!Staircase::empty(Ambient::Int).contains(&r(0), &r(1)).unwrap());
        assert!(Staircase::full(Ambient::Int).contains(&r(0), &r(1)).unwrap());
        assert!(matches!(
            s.contains(&r(2), &r(2)),
            Err(Error::PointOutsideAmbient { .. })
        ));
        let q = Staircase::normalize(
            vec![Generator::corner(fin(1), fin(2)).unwrap()],
            Ambient::Plane,
        );
        assert!(q.contains_point(&r(1), &r(2)).unwrap());
        assert!(!q.contains_point(&r(0), &r(5)).unwrap());
    }

    #[test]
    fn loop_profile() {
        let delta = Rat::new(3, 2);
        let p = loop_staircase(&delta).profile();
        let eval = |c: Rat| p.eval(&c).fin().unwrap().clone();
        // c/2 up to -2δ, then c + δ, flat δ on [0, 2δ], then c/2 again.
        assert_eq!(eval(r(-10)), r(-5));
        assert_eq!(eval(r(-3)), Rat::new(-3, 2));
        assert_eq!(eval(r(-1)), Rat::new(1, 2));
        assert_eq!(eval(r(0)), delta);
        assert_eq!(eval(r(2)), delta);
        assert_eq!(eval(r(3)), delta);
        assert_eq!(eval(r(10)), r(5));
        assert_eq!(p.breakpoints(), vec![r(-3), r(0), r(3)]);
        let full = Staircase::full(Ambient::Int).profile();
        assert_eq!(full.eval(&r(7)), Ext::Fin(Rat::new(7, 2)));
        assert!(full.breakpoints().is_empty());
        assert_eq!(Staircase::empty(Ambient::Int).profile(), Profile::Empty);
    }

    #[test]
    fn hausdorff_examples() {
        let delta = Rat::new(3, 2);
        let full = Staircase::full(Ambient::Int);
        let lp = loop_staircase(&delta);
        assert_eq!(lp.hausdorff(&lp).unwrap(), ExtDist::zero());
        assert_eq!(full.hausdorff(&lp).unwrap(), delta);
        assert_eq!(
            full.hausdorff(&Staircase::empty(Ambient::Int)).unwrap(),
            ExtDist::Infinite
        );
        let u = Staircase::normalize(
            vec![gen(fin(0), Ext::NegInf), gen(Ext::PosInf, fin(2))],
            Ambient::Int,
        );
        let v = Staircase::normalize(
            vec![gen(fin(1), Ext::NegInf), gen(Ext::PosInf, fin(3))],
            Ambient::Int,
        );
        assert_eq!(u.hausdorff(&v).unwrap(), r(1));
        assert_eq!(
            u.hausdorff(&Staircase::full(Ambient::Plane)).unwrap_err(),
            Error::AmbientMismatch
        );
    }

    #[test]
    fn plane_quadrants() {
        let a = Staircase::normalize(vec![Generator::corner(fin(0), fin(0)).unwrap()], Ambient::Plane);
        let b = Staircase::normalize(vec![Generator::corner(fin(1), fin(1)).unwrap()], Ambient::Plane);
        let c = Staircase::normalize(vec![Generator::corner(fin(3), fin(1)).unwrap()], Ambient::Plane);
        assert_eq!(a.hausdorff(&b).unwrap(), r(1));
        assert_eq!(a.hausdorff(&c).unwrap(), r(3));
        let full = Staircase::full(Ambient::Plane);
        assert_eq!(full.hausdorff(&a).unwrap(), ExtDist::Infinite);
        assert_eq!(full.hausdorff(&full).unwrap(), ExtDist::zero());
        let strip = Staircase::normalize(
            vec![Generator::corner(fin(2), Ext::NegInf).unwrap()],
            Ambient::Plane,
        );
        let strip2 = Staircase::normalize(
            vec![Generator::corner(fin(-1), Ext::NegInf).unwrap()],
            Ambient::Plane,
        );
        assert_eq!(strip.hausdorff(&strip2).unwrap(), r(3));
        assert_eq!(strip.hausdorff(&a).unwrap(), ExtDist::Infinite);
    }

    #[test]
    fn thicken_examples() {
        let s = Staircase::normalize(vec![Generator::finite(r(1), r(3))], Ambient::Int);
        assert_eq!(s.thicken(&Rat::zero()).unwrap(), s);
        let t = s.thicken(&r(1)).unwrap();
        assert_eq!(t.generators(), &[Generator::finite(r(2), r(2))]);
        assert!(s.subset(&t).unwrap());
        assert!(!t.subset(&s).unwrap());
        assert!(Staircase::full(Ambient::Int).thicken(&r(5)).unwrap().is_full());
        assert!(Staircase::empty(Ambient::Int).thicken(&r(5)).unwrap().is_empty());
        assert_eq!(s.thicken(&r(-1)).unwrap_err(), Error::NegativeEpsilon);
    }

    #[test]
    fn loop_interleaving_threshold() {
        let delta = Rat::new(3, 2);
        let full = Staircase::full(Ambient::Int);
        let lp = loop_staircase(&delta);
        assert!(full.interleaved(&lp, &delta).unwrap());
        assert!(!full.interleaved(&lp, &Rat::new(7, 5)).unwrap());
        assert!(lp.interleaved(&lp, &Rat::zero()).unwrap());
        assert!(Staircase::empty(Ambient::Int).subset(&lp).unwrap());
    }

    #[test]
    fn profile_dump_pieces() {
        let pieces = loop_staircase(&Rat::new(3, 2)).profile().pieces();
        let slopes: Vec<Rat> = pieces.iter().map(|(s, _)| s.clone()).collect();
        assert_eq!(slopes, vec![Rat::new(1, 2), r(1), r(0), Rat::new(1, 2)]);
        assert_eq!(pieces[0].1, Ext::NegInf);
        assert_eq!(pieces[2].1, Ext::Fin(Rat::new(3, 2)));
    }

    fn arb_coord() -> impl Strategy<Value = Ext> {
        prop_oneof![
            8 => (-6i64..=6, 1i64..=2).prop_map(|(n, d)| Ext::Fin(Rat::new(n, d))),
            1 => Just(Ext::PosInf),
            1 => Just(Ext::NegInf),
        ]
    }

    fn arb_staircase(ambient: Ambient) -> impl Strategy<Value = Staircase> {
        proptest::collection::vec((arb_coord(), arb_coord()), 0..5).prop_map(move |pairs| {
            let gens = pairs
                .into_iter()
                .filter_map(|(l, r)| Generator::new(l, r).ok())
                .collect();
            Staircase::normalize(gens, ambient)
        })
    }

    fn arb_ambient() -> impl Strategy<Value = Ambient> {
        prop_oneof![Just(Ambient::Int), Just(Ambient::Plane)]
    }

    proptest! {
        #[test]
        fn profile_shape(s in arb_staircase(Ambient::Int)) {
            if let Profile::Finite(f) = s.profile() {
                let pts = f.points();
                for w in pts.windows(2) {
                    let m = slope(&w[0], &w[1]);
                    prop_assert!(m == Rat::zero() || m == Rat::new(1, 2) || m == Rat::one());
                    prop_assert!(w[0].1 <= w[1].1);
                }
                for (c, g) in pts {
                    prop_assert!(g >= &c.half());
                }
            }
        }

        #[test]
        fn hausdorff_is_a_pseudometric(
            (u, v, w) in arb_ambient().prop_flat_map(|a| (arb_staircase(a), arb_staircase(a), arb_staircase(a)))
        ) {
            let uv = u.hausdorff(&v).unwrap();
            prop_assert_eq!(&uv, &v.hausdorff(&u).unwrap());
            prop_assert_eq!(u.hausdorff(&u).unwrap(), ExtDist::zero());
            let via = u.hausdorff(&w).unwrap().sum(&w.hausdorff(&v).unwrap());
            prop_assert!(uv <= via);
        }

        #[test]
        fn flow_laws(s in arb_staircase(Ambient::Int), a in 0i64..5, b in 0i64..5) {
            let (a, b) = (Rat::new(a, 2), Rat::new(b, 3));
            let ab = s.thicken(&a).unwrap().thicken(&b).unwrap();
            prop_assert_eq!(&ab, &s.thicken(&(&a + &b)).unwrap());
            prop_assert!(s.subset(&s.thicken(&a).unwrap()).unwrap());
            prop_assert!(s.thicken(&a).unwrap().subset(&ab).unwrap());
        }

        #[test]
        fn hausdorff_is_least_interleaving(
            (u, v) in arb_ambient().prop_flat_map(|a| (arb_staircase(a), arb_staircase(a)))
        ) {
            if let ExtDist::Finite(d) = u.hausdorff(&v).unwrap() {
                prop_assert!(u.interleaved(&v, &d).unwrap());
                if d.is_positive() {
                    let below = &d - &Rat::new(1, 1000).min(d.half());
                    prop_assert!(!u.interleaved(&v, &below).unwrap());
                }
            } else {
                prop_assert!(!u.interleaved(&v, &Rat::int(1000)).unwrap());
            }
        }
    }
}
