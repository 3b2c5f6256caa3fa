//! Ordered sequences, lattice paths and the region/anchor machinery on them.
//!
//! A path in `L_{d,n}` has `d` horizontal and `n` vertical steps. Its
//! coordinates are the 1-indexed positions of the horizontal steps, which
//! identifies `L_{d,n}` with `os_{n+1}^d`.

use std::fmt;

use num::integer::{binomial, gcd};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{q, qfrac, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parameters do not match: {0}")]
    Mismatch(String),
    #[error("gcd(n, d) = {0}, expected coprime parameters")]
    NotCoprime(usize),
    #[error("grid point ({0}, {1}) outside the allowed range")]
    PointOutOfRange(i64, i64),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no resolving insertion found for {0}")]
    NoResolvingInsertion(String),
}

/// Strictly increasing `d`-tuple in `[1, n+d-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedSeq {
    n: usize,
    d: usize,
    entries: Vec<usize>,
}

impl OrderedSeq {
    pub fn new(n: usize, d: usize, entries: Vec<usize>) -> Result<Self, PathError> {
        if n < 1 || d < 1 {
            return Err(PathError::InvalidParameters(format!("n={n}, d={d}")));
        }
        let ok = entries.len() == d
            && entries.first().is_some_and(|&e| e >= 1)
            && entries.last().is_some_and(|&e| e <= n + d - 1)
            && entries.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(PathError::InvalidParameters(format!("{entries:?} not in os_{n}^{d}")));
        }
        Ok(OrderedSeq { n, d, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn label(&self) -> String {
        compact_label(&self.entries)
    }
}

/// Joins entries without separators when all are single digits, as in `124`.
pub fn compact_label(xs: &[usize]) -> String {
    if xs.iter().all(|&x| x < 10) {
        xs.iter().map(|x| x.to_string()).collect()
    } else {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for OrderedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All of `os_n^d` in lexicographic order.
pub fn enumerate_os(n: usize, d: usize) -> Result<Vec<OrderedSeq>, PathError> {
    if n < 1 || d < 1 {
        return Err(PathError::InvalidParameters(format!("n={n}, d={d}")));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(lo: usize, hi: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(v + 1, hi, d, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(1, n + d - 1, d, &mut cur, &mut raw);
    for e in raw {
        out.push(OrderedSeq { n, d, entries: e });
    }
    Ok(out)
}

/// Interleaving order `x1 <= y1 < x2 <= y2 < ... < xd <= yd`.
pub fn preceq(x: &OrderedSeq, y: &OrderedSeq) -> Result<bool, PathError> {
    if x.n != y.n || x.d != y.d {
        return Err(PathError::Mismatch(format!("{x} vs {y}")));
    }
    Ok(preceq_raw(&x.entries, &y.entries))
}

/// `preceq` on bare coordinate vectors of equal length.
pub fn preceq_raw(x: &[usize], y: &[usize]) -> bool {
    debug_assert_eq!(x.len(), y.len());
    let d = x.len();
    (0..d).all(|i| x[i] <= y[i]) && (0..d.saturating_sub(1)).all(|i| y[i] < x[i + 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    H,
    V,
}

/// Monotone path in a `d x n` grid. The derived order is lexicographic on
/// coordinates since an earlier `H` means a smaller coordinate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    d: usize,
    n: usize,
    steps: Vec<Step>,
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}[{}x{}]", self.coords_label(), self.d, self.n)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.step_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl LatticePath {
    pub fn new(d: usize, n: usize, steps: Vec<Step>) -> Result<Self, PathError> {
        let h = steps.iter().filter(|&&s| s == Step::H).count();
        if steps.len() != d + n || h != d {
            return Err(PathError::InvalidParameters(format!(
                "{} steps with {h} H, expected {} with {d} H",
                steps.len(),
                d + n
            )));
        }
        Ok(LatticePath { d, n, steps })
    }

    pub fn parse(d: usize, n: usize, s: &str) -> Result<Self, PathError> {
        let steps = s
            .chars()
            .map(|c| match c {
                'H' | 'h' => Ok(Step::H),
                'V' | 'v' => Ok(Step::V),
                _ => Err(PathError::InvalidParameters(format!("bad step {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(d, n, steps)
    }

    /// Path in `L_{d,n}` with horizontal steps at the given 1-indexed positions.
    pub fn from_coord_vec(d: usize, n: usize, c: &[usize]) -> Result<Self, PathError> {
        let x = OrderedSeq::new(n + 1, d, c.to_vec())?;
        Ok(from_coords(&x))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| if *s == Step::H { 'H' } else { 'V' }).collect()
    }

    pub fn coord_vec(&self) -> Vec<usize> {
        self.steps.iter().enumerate().filter(|(_, s)| **s == Step::H).map(|(i, _)| i + 1).collect()
    }

    pub fn coords_label(&self) -> String {
        compact_label(&self.coord_vec())
    }

    pub fn first_is_h(&self) -> bool {
        self.steps.first() == Some(&Step::H)
    }

    pub fn last_is_h(&self) -> bool {
        self.steps.last() == Some(&Step::H)
    }

    /// The `d+n+1` lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut p = GridPoint::new(0, 0);
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::H => p.x += 1,
                Step::V => p.y += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn passes_through(&self, pt: GridPoint) -> bool {
        self.points().contains(&pt)
    }

    /// Height at which each horizontal step is taken.
    fn h_heights(&self) -> Vec<usize> {
        self.coord_vec().iter().enumerate().map(|(i, c)| c - 1 - i).collect()
    }
}

pub fn coords(l: &LatticePath) -> OrderedSeq {
    OrderedSeq { n: l.n + 1, d: l.d, entries: l.coord_vec() }
}

pub fn from_coords(x: &OrderedSeq) -> LatticePath {
    let (d, n) = (x.d, x.n - 1);
    let mut steps = vec![Step::V; d + n];
    for &c in &x.entries {
        steps[c - 1] = Step::H;
    }
    LatticePath { d, n, steps }
}

/// All paths of `L_{d,n}`, sorted by coordinates.
pub fn enumerate_paths(d: usize, n: usize) -> Vec<LatticePath> {
    if d == 0 {
        return vec![LatticePath { d, n, steps: vec![Step::V; n] }];
    }
    enumerate_os(n + 1, d).expect("d >= 1").iter().map(from_coords).collect()
}

/// Geometric order: `l1` weakly below `l2`, and no 2x1 box fits in the skew
/// shape between them. Cells are tested one by one.
pub fn relation_r(l1: &LatticePath, l2: &LatticePath) -> Result<bool, PathError> {
    if l1.d != l2.d || l1.n != l2.n {
        return Err(PathError::Mismatch(format!("{l1:?} vs {l2:?}")));
    }
    let (h1, h2) = (l1.h_heights(), l2.h_heights());
    // column i holds cells [0, h(i)) under the path
    if (0..l1.d).any(|i| h1[i] > h2[i]) {
        return Ok(false);
    }
    let in_skew = |i: usize, j: usize| h1[i] <= j && j < h2[i];
    for i in 0..l1.d.saturating_sub(1) {
        for j in 0..l1.n {
            if in_skew(i, j) && in_skew(i + 1, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Moves the first step to the end.
pub fn rotate(l: &LatticePath) -> LatticePath {
    rotate_pow(l, 1)
}

pub fn rotate_pow(l: &LatticePath, k: i64) -> LatticePath {
    let len = l.steps.len();
    if len == 0 {
        return l.clone();
    }
    let k = k.rem_euclid(len as i64) as usize;
    let mut steps = l.steps[k..].to_vec();
    steps.extend_from_slice(&l.steps[..k]);
    LatticePath { d: l.d, n: l.n, steps }
}

/// Weakly below the diagonal from `(0,0)` to `(d,n)` at every lattice point.
pub fn is_dyck(l: &LatticePath) -> bool {
    let (d, n) = (l.d as i64, l.n as i64);
    l.points().iter().all(|p| d * p.y <= n * p.x)
}

fn require_coprime(d: usize, n: usize) -> Result<(), PathError> {
    let g = gcd(d, n);
    if g != 1 {
        return Err(PathError::NotCoprime(g));
    }
    Ok(())
}

pub fn enumerate_dyck(d: usize, n: usize) -> Result<Vec<LatticePath>, PathError> {
    if d < 1 || n < 1 {
        return Err(PathError::InvalidParameters(format!("d={d}, n={n}")));
    }
    require_coprime(d, n)?;
    Ok(enumerate_paths(d, n).into_iter().filter(is_dyck).collect())
}

pub fn dyck_count_formula(d: usize, n: usize) -> usize {
    binomial(d + n, d) / (d + n)
}

/// The Dyck path in the rotation orbit of `l` and `k` with `rotate_pow(dyck, k) = l`.
pub fn dyck_orbit_representative(l: &LatticePath) -> Result<(LatticePath, usize), PathError> {
    require_coprime(l.d, l.n)?;
    let len = l.d + l.n;
    for k in 0..len {
        let cand = rotate_pow(l, -(k as i64));
        if is_dyck(&cand) {
            return Ok((cand, k));
        }
    }
    Err(PathError::Precondition(format!("no Dyck path in the orbit of {l:?}")))
}

/// Prepends a horizontal step.
pub fn bar(l: &LatticePath) -> LatticePath {
    let mut steps = vec![Step::H];
    steps.extend_from_slice(&l.steps);
    LatticePath { d: l.d + 1, n: l.n, steps }
}

/// Appends a horizontal step.
pub fn tilde(l: &LatticePath) -> LatticePath {
    let mut steps = l.steps.clone();
    steps.push(Step::H);
    LatticePath { d: l.d + 1, n: l.n, steps }
}

/// Model parameters `(d, n)` of a path in `L_{d+1,n}`.
fn model(l: &LatticePath) -> Result<(i64, i64), PathError> {
    if l.d < 2 {
        return Err(PathError::InvalidParameters(format!("{l:?} needs width d+1 >= 2")));
    }
    require_coprime(l.d - 1, l.n)?;
    Ok(((l.d - 1) as i64, l.n as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorData {
    pub anchor: GridPoint,
    pub h: usize,
    pub mu: Q,
    /// Contributing corners with their `v_F` and `w_F`.
    pub corners: Vec<(GridPoint, Q, Q)>,
}

/// `n * x_int(P)` with `x_int = x - (d/n) y`; integer-valued.
fn scaled_xint(p: GridPoint, d: i64, n: i64) -> i64 {
    n * p.x - d * p.y
}

pub fn anchor_data(l: &LatticePath) -> Result<AnchorData, PathError> {
    let (d, n) = model(l)?;
    let pts = l.points();
    let xs: Vec<i64> = pts.iter().map(|&p| scaled_xint(p, d, n)).collect();
    let min = *xs.iter().min().expect("nonempty");
    let mut k = xs.iter().position(|&x| x == min).expect("min attained");
    let corner = GridPoint::new(d, n);
    if k == 0 {
        if let Some(j) = pts.iter().position(|&p| p == corner) {
            k = j;
        }
    }
    let anchor = pts[k];
    let mut mu = Q::zero();
    let mut corners = Vec::new();
    for m in (k + 1)..pts.len() - 1 {
        if l.steps[m - 1] != Step::V || l.steps[m] != Step::H {
            continue;
        }
        let gap = xs[m] - xs[k];
        if 0 < gap && gap < n {
            let v = q(1) - qfrac(gap, n);
            let w = qfrac(n, d) * &v;
            mu += &w * &w;
            corners.push((pts[m], v, w));
        }
    }
    Ok(AnchorData { anchor, h: anchor.y as usize, mu, corners })
}

/// The path `H^x V^y H^{d+1-x} V^{n-y}` in `L_{d+1,n}`.
pub fn ell_of_point(d: usize, n: usize, pt: GridPoint) -> Result<LatticePath, PathError> {
    if pt.x < 0 || pt.y < 0 || pt.x as usize > d + 1 || pt.y as usize > n {
        return Err(PathError::PointOutOfRange(pt.x, pt.y));
    }
    let (x, y) = (pt.x as usize, pt.y as usize);
    let mut steps = vec![Step::H; x];
    steps.extend(std::iter::repeat(Step::V).take(y));
    steps.extend(std::iter::repeat(Step::H).take(d + 1 - x));
    steps.extend(std::iter::repeat(Step::V).take(n - y));
    Ok(LatticePath { d: d + 1, n, steps })
}

/// Whether `p` lies on or below the curve through `dpt`: slope `n/d` up to
/// `dpt`, flat for one unit, then slope `n/d` again.
fn below_curve(p: GridPoint, dpt: GridPoint, d: i64, n: i64) -> bool {
    if p.x <= dpt.x {
        d * (p.y - dpt.y) <= n * (p.x - dpt.x)
    } else if p.x <= dpt.x + 1 {
        p.y <= dpt.y
    } else {
        d * (p.y - dpt.y) <= n * (p.x - dpt.x - 1)
    }
}

fn above_curve(p: GridPoint, dpt: GridPoint, d: i64, n: i64) -> bool {
    if p.x <= dpt.x {
        d * (p.y - dpt.y) >= n * (p.x - dpt.x)
    } else if p.x <= dpt.x + 1 {
        p.y >= dpt.y
    } else {
        d * (p.y - dpt.y) >= n * (p.x - dpt.x - 1)
    }
}

/// Membership of `l` in the region `R_D`.
pub fn region_contains(dpt: GridPoint, l: &LatticePath) -> Result<bool, PathError> {
    let (d, n) = model(l)?;
    if dpt.x < 0 || dpt.x > d || dpt.y < 0 || dpt.y > n {
        return Err(PathError::PointOutOfRange(dpt.x, dpt.y));
    }
    let base = ell_of_point(d as usize, n as usize, dpt)?;
    let above_base = l.coord_vec().iter().zip(base.coord_vec()).all(|(a, b)| *a >= b);
    Ok(above_base && l.points().iter().all(|&p| below_curve(p, dpt, d, n)))
}

/// Paths of `L_{d+1,n}` in `R_D`, sorted by coordinates.
pub fn region(d: usize, n: usize, dpt: GridPoint) -> Result<Vec<LatticePath>, PathError> {
    let mut out = Vec::new();
    for l in enumerate_paths(d + 1, n) {
        if region_contains(dpt, &l)? {
            out.push(l);
        }
    }
    Ok(out)
}

fn check_index(d: usize, n: usize, i: usize) -> Result<(), PathError> {
    require_coprime(d, n)?;
    if i > n + d {
        return Err(PathError::IndexOutOfRange(i));
    }
    Ok(())
}

/// Points on or below the curve through `(0,0)` with `x + y = i`, excluding `(d+1, n)`.
pub fn delta_set(d: usize, n: usize, i: usize) -> Result<Vec<GridPoint>, PathError> {
    check_index(d, n, i)?;
    let (di, ni) = (d as i64, n as i64);
    let mut out = Vec::new();
    for x in 0..=di + 1 {
        let y = i as i64 - x;
        if y < 0 || y > ni || (x == di + 1 && y == ni) {
            continue;
        }
        let p = GridPoint::new(x, y);
        if below_curve(p, GridPoint::new(0, 0), di, ni) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Points on or above the curve through `(d,n)` at distance `i` from
/// `(d+1, n)` in the taxicab sense, excluding `(0,0)`.
pub fn delta_prime_set(d: usize, n: usize, i: usize) -> Result<Vec<GridPoint>, PathError> {
    check_index(d, n, i)?;
    let (di, ni) = (d as i64, n as i64);
    let mut out = Vec::new();
    for x in 0..=di + 1 {
        let y = ni - (i as i64 - (di + 1 - x));
        if y < 0 || y > ni || (x == 0 && y == 0) {
            continue;
        }
        let p = GridPoint::new(x, y);
        if above_curve(p, GridPoint::new(di, ni), di, ni) {
            out.push(p);
        }
    }
    Ok(out)
}

/// `D' = (d+1-x, n-y)`.
pub fn dual_point(d: usize, n: usize, p: GridPoint) -> GridPoint {
    GridPoint::new(d as i64 + 1 - p.x, n as i64 - p.y)
}

/// Elements of `R_(0,0)` passing through `D`.
pub fn s_region(d: usize, n: usize, dpt: GridPoint) -> Result<Vec<LatticePath>, PathError> {
    Ok(region(d, n, GridPoint::new(0, 0))?.into_iter().filter(|l| l.passes_through(dpt)).collect())
}

/// The exact-sequence terms `[p, l_d, ..., l_1, q]` of a window of `d+2` values;
/// the `k`-th term drops entry `d+1-k`.
pub fn strip_sequence(d: usize, n: usize, window: &[usize]) -> Result<Vec<LatticePath>, PathError> {
    let ok = window.len() == d + 2
        && window.first().is_some_and(|&w| w >= 1)
        && window.last().is_some_and(|&w| w <= n + d + 1)
        && window.windows(2).all(|w| w[0] < w[1]);
    if !ok {
        return Err(PathError::InvalidParameters(format!("window {window:?} for d={d}, n={n}")));
    }
    Ok((0..d + 2).map(|k| drop_entry(d, n, window, d + 1 - k)).collect())
}

fn drop_entry(d: usize, n: usize, window: &[usize], idx: usize) -> LatticePath {
    let c: Vec<usize> =
        window.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, &v)| v).collect();
    LatticePath::from_coord_vec(d + 1, n, &c).expect("valid window")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingWindow {
    pub window: Vec<usize>,
    pub position: usize,
}

impl ResolvingWindow {
    /// The other `d+1` terms of the strip.
    pub fn others(&self, d: usize, n: usize) -> Vec<LatticePath> {
        (0..self.window.len())
            .filter(|&i| i != self.position)
            .map(|i| drop_entry(d, n, &self.window, i))
            .collect()
    }
}

/// `(h, mu)` comparison used by the generation induction: strictly smaller key.
pub fn key_decreases(from: &AnchorData, to: &AnchorData) -> bool {
    to.h > from.h || (to.h == from.h && to.mu < from.mu)
}

/// Smallest insertable value whose window resolves `l` by strictly smaller keys.
pub fn resolving_sequence(l: &LatticePath) -> Result<ResolvingWindow, PathError> {
    let a = anchor_data(l)?;
    if a.h == 0 || !a.mu.is_positive() {
        return Err(PathError::Precondition(format!("{l:?} has h={}, mu={}", a.h, a.mu)));
    }
    let (d, n) = (l.d - 1, l.n);
    let c = l.coord_vec();
    for v in 1..=n + d + 1 {
        if c.contains(&v) {
            continue;
        }
        let mut window = c.clone();
        window.push(v);
        window.sort_unstable();
        let position = window.iter().position(|&w| w == v).expect("inserted");
        let cand = ResolvingWindow { window, position };
        let mut good = true;
        for other in cand.others(d, n) {
            if !key_decreases(&a, &anchor_data(&other)?) {
                good = false;
                break;
            }
        }
        if good {
            return Ok(cand);
        }
    }
    Err(PathError::NoResolvingInsertion(format!("{l:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(d: usize, n: usize, c: &[usize]) -> LatticePath {
        LatticePath::from_coord_vec(d, n, c).unwrap()
    }

    fn cvs(ls: &[LatticePath]) -> Vec<Vec<usize>> {
        ls.iter().map(|l| l.coord_vec()).collect()
    }

    #[test]
    fn os_examples() {
        let e = enumerate_os(2, 1).unwrap();
        assert_eq!(e.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>(), vec![vec![1], vec![2]]);
        assert_eq!(enumerate_os(5, 3).unwrap().len(), 35);
        let e = enumerate_os(3, 2).unwrap();
        let got: Vec<Vec<usize>> = e.iter().map(|x| x.entries().to_vec()).collect();
        let mut oracle = Vec::new();
        for a in 1..=4 {
            for b in a + 1..=4 {
                oracle.push(vec![a, b]);
            }
        }
        assert_eq!(got, oracle);
        assert!(enumerate_os(0, 2).is_err());
    }

    #[test]
    fn preceq_examples() {
        let s = |v: &[usize]| OrderedSeq::new(5, 3, v.to_vec()).unwrap();
        assert!(preceq(&s(&[1, 2, 5]), &s(&[1, 4, 6])).unwrap());
        assert!(preceq(&s(&[1, 4, 6]), &s(&[3, 5, 7])).unwrap());
        assert!(!preceq(&s(&[1, 2, 5]), &s(&[3, 5, 7])).unwrap());
        assert!(preceq(&s(&[1, 2, 4]), &s(&[1, 3, 5])).unwrap());
        let other = OrderedSeq::new(4, 3, vec![1, 2, 3]).unwrap();
        assert!(preceq(&s(&[1, 2, 3]), &other).is_err());
    }

    #[test]
    fn coords_examples() {
        let l = LatticePath::parse(3, 4, "HVVHVHV").unwrap();
        assert_eq!(l.coord_vec(), vec![1, 4, 6]);
        let l = LatticePath::parse(4, 4, "HHVHVHVV").unwrap();
        assert_eq!(l.coord_vec(), vec![1, 2, 4, 6]);
        for l in enumerate_paths(2, 2) {
            assert_eq!(from_coords(&coords(&l)), l);
        }
        assert_eq!(enumerate_paths(2, 2).len(), 6);
    }

    #[test]
    fn relation_examples() {
        let a = lp(3, 4, &[1, 2, 5]);
        let b = lp(3, 4, &[1, 4, 6]);
        let c = lp(3, 4, &[3, 5, 7]);
        assert!(relation_r(&a, &a).unwrap());
        assert!(relation_r(&a, &b).unwrap());
        assert!(relation_r(&b, &c).unwrap());
        assert!(!relation_r(&a, &c).unwrap());
    }

    #[test]
    fn rotation_examples() {
        let l = lp(3, 4, &[1, 3, 5]);
        assert_eq!(rotate(&l).coord_vec(), vec![2, 4, 7]);
        assert_eq!(rotate_pow(&l, 0), l);
        assert_eq!(rotate_pow(&l, 7), l);
        assert_eq!(rotate_pow(&rotate(&l), -1), l);
    }

    #[test]
    fn dyck_examples() {
        let got = cvs(&enumerate_dyck(3, 4).unwrap());
        assert_eq!(got, vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 4], vec![1, 3, 5]]);
        for n in 1..8 {
            assert_eq!(enumerate_dyck(1, n).unwrap().len(), 1);
        }
        assert_eq!(cvs(&enumerate_dyck(3, 2).unwrap()), vec![vec![1, 2, 3], vec![1, 2, 4]]);
        assert!(enumerate_dyck(2, 4).is_err());
    }

    #[test]
    fn orbit_representative_examples() {
        let l = lp(3, 4, &[2, 4, 7]);
        let (r, k) = dyck_orbit_representative(&l).unwrap();
        assert_eq!((r.coord_vec(), k), (vec![1, 3, 5], 1));
        let dy = lp(3, 4, &[1, 2, 4]);
        assert_eq!(dyck_orbit_representative(&dy).unwrap(), (dy.clone(), 0));
    }

    #[test]
    fn bar_tilde_examples() {
        let l = lp(3, 4, &[1, 3, 5]);
        assert_eq!(bar(&l).coord_vec(), vec![1, 2, 4, 6]);
        assert_eq!(tilde(&l).coord_vec(), vec![1, 3, 5, 8]);
        let b = bar(&l);
        assert_eq!(LatticePath::new(3, 4, b.steps()[1..].to_vec()).unwrap(), l);
    }

    #[test]
    fn anchor_examples() {
        for dy in enumerate_dyck(3, 4).unwrap() {
            let a = anchor_data(&bar(&dy)).unwrap();
            assert_eq!((a.anchor, a.h, a.mu.clone()), (GridPoint::new(0, 0), 0, q(0)));
            let a = anchor_data(&tilde(&dy)).unwrap();
            assert_eq!((a.anchor, a.h, a.mu.clone()), (GridPoint::new(3, 4), 4, q(0)));
        }
        let a = anchor_data(&lp(4, 4, &[2, 4, 5, 7])).unwrap();
        assert_eq!(a.anchor, GridPoint::new(0, 1));
        assert_eq!(a.h, 1);
        assert_eq!(a.mu, q(1));
        assert_eq!(a.corners, vec![(GridPoint::new(1, 2), qfrac(3, 4), q(1))]);
    }

    #[test]
    fn region_examples() {
        let r00 = region(3, 4, GridPoint::new(0, 0)).unwrap();
        let bars: Vec<LatticePath> = enumerate_dyck(3, 4).unwrap().iter().map(bar).collect();
        assert_eq!(r00, bars);
        let r34 = region(3, 4, GridPoint::new(3, 4)).unwrap();
        let tildes: Vec<LatticePath> = enumerate_dyck(3, 4).unwrap().iter().map(tilde).collect();
        assert_eq!(r34, tildes);
        for x in 0..=3 {
            for y in 0..=4 {
                let p = GridPoint::new(x, y);
                let base = ell_of_point(3, 4, p).unwrap();
                let inside = region_contains(p, &base).unwrap();
                let expected = delta_prime_set(3, 4, (4 - x + 4 - y) as usize)
                    .unwrap_or_default()
                    .contains(&p)
                    || p == GridPoint::new(0, 0);
                if expected {
                    assert!(inside, "{p}");
                }
            }
        }
        assert!(region_contains(GridPoint::new(5, 0), &lp(4, 4, &[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn delta_examples() {
        for (d, n) in [(3, 4), (2, 3), (3, 2), (1, 5)] {
            assert_eq!(delta_set(d, n, 1).unwrap(), vec![GridPoint::new(1, 0)]);
            assert_eq!(delta_prime_set(d, n, 1).unwrap(), vec![GridPoint::new(d as i64, n as i64)]);
        }
        assert!(delta_set(3, 4, 8).is_err());
    }

    #[test]
    fn s_region_first_step() {
        let s = s_region(3, 4, GridPoint::new(1, 0)).unwrap();
        let r = region(3, 4, GridPoint::new(3, 4)).unwrap();
        let rotated: Vec<LatticePath> = s.iter().map(|l| rotate_pow(l, 1)).collect();
        assert_eq!(rotated, r);
        for l in &s {
            let body = LatticePath::new(3, 4, l.steps()[1..].to_vec()).unwrap();
            assert_eq!(rotate(l), tilde(&body));
        }
    }

    #[test]
    fn strip_example() {
        let s = strip_sequence(3, 4, &[1, 2, 4, 6, 8]).unwrap();
        assert_eq!(
            cvs(&s),
            vec![vec![1, 2, 4, 6], vec![1, 2, 4, 8], vec![1, 2, 6, 8], vec![1, 4, 6, 8], vec![2, 4, 6, 8]]
        );
        assert!(s[0].first_is_h());
        assert!(strip_sequence(3, 4, &[1, 2, 4, 6, 9]).is_err());
    }

    #[test]
    fn resolving_example() {
        let l = lp(4, 4, &[2, 4, 5, 7]);
        let a = anchor_data(&l).unwrap();
        let w = resolving_sequence(&l).unwrap();
        let mut dropped = w.window.clone();
        dropped.remove(w.position);
        assert_eq!(dropped, l.coord_vec());
        let others = w.others(3, 4);
        assert_eq!(others.len(), 4);
        for o in others {
            assert!(key_decreases(&a, &anchor_data(&o).unwrap()));
        }
        let t = tilde(&lp(3, 4, &[1, 2, 3]));
        assert!(matches!(resolving_sequence(&t), Err(PathError::Precondition(_))));
    }
}
