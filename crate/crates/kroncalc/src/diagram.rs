//! Skew diagram geometry: connected components, isomorphism classes with
//! canonical string keys, border strips, Young hulls, disjoint unions and
//! enumeration of all classes of a given size.
//!
//! A connected component is stored as its list of row intervals, top row
//! first, normalized so the lowest start column and the top row are both 1.
//! Rows `[s_i, e_i]` of a valid component satisfy `s_i >= s_{i+1}`,
//! `e_i >= e_{i+1}` and `s_i <= e_{i+1}` (consecutive rows overlap in at
//! least one column). The key of a component is `"s1:e1;s2:e2;..."`; the key
//! of a class joins its component keys, sorted by size descending then
//! lexicographically, with `"|"`.

use crate::error::{Error, Result};
use crate::partition::Partition;
use std::collections::BTreeMap;
use std::fmt;

pub type Cell = (u64, u64);

/// A concrete pair outer/inner of partitions with inner contained in outer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells (row, col), 1-based, row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &row) in self.outer.parts().iter().enumerate() {
            let r = i as u64 + 1;
            for c in self.inner.part(i + 1) + 1..=row {
                out.push((r, c));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        let (r, c) = cell;
        r >= 1 && c > self.inner.part(r as usize) && c <= self.outer.part(r as usize)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Edge-adjacency components as cell sets, topmost component first.
    pub fn connected_components(&self) -> Vec<Vec<Cell>> {
        let mut out: Vec<Vec<Cell>> = Vec::new();
        let mut current: Vec<Cell> = Vec::new();
        // Rows of a skew shape split into components exactly where consecutive
        // nonempty rows fail to overlap, so a single top-down sweep suffices.
        let mut prev: Option<(u64, u64, u64)> = None; // (row, start, end)
        for (i, &row) in self.outer.parts().iter().enumerate() {
            let r = i as u64 + 1;
            let s = self.inner.part(i + 1) + 1;
            let e = row;
            if s > e {
                continue; // empty row
            }
            let connected = match prev {
                Some((pr, ps, pe)) => pr + 1 == r && s <= pe && ps <= e,
                None => false,
            };
            if !connected && !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            current.extend((s..=e).map(|c| (r, c)));
            prev = Some((r, s, e));
        }
        if !current.is_empty() {
            out.push(current);
        }
        out
    }

    /// Number of removable squares of the outer shape lying in this skew
    /// diagram.
    pub fn removable_corner_count(&self) -> u64 {
        self.cells()
            .into_iter()
            .filter(|&(r, c)| {
                self.outer.part(r as usize) == c && self.outer.part(r as usize + 1) < c
            })
            .count() as u64
    }

    /// The union of the paper's two diagrams: the second operand is placed
    /// above and to the right of the first.
    pub fn disjoint_union(&self, other: &SkewShape) -> SkewShape {
        let shift = self.outer.part(1);
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for &m in other.outer.parts() {
            outer.push(shift.checked_add(m).expect("partition part overflow"));
        }
        for i in 1..=other.outer.len() {
            inner.push(shift + other.inner.part(i));
        }
        outer.extend_from_slice(self.outer.parts());
        for i in 1..=self.outer.len() {
            inner.push(self.inner.part(i));
        }
        let outer = Partition::from_unsorted(outer);
        let inner = Partition::from_unsorted(inner);
        SkewShape { outer, inner }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A normalized connected component: row intervals top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    rows: Vec<(u64, u64)>,
}

impl Component {
    fn validate(rows: &[(u64, u64)]) -> Result<()> {
        if rows.is_empty() {
            return Err(Error::Invalid("component has no rows".into()));
        }
        if rows.last().unwrap().0 != 1 {
            return Err(Error::Invalid("component is not column-normalized".into()));
        }
        for w in rows.windows(2) {
            let ((s0, e0), (s1, e1)) = (w[0], w[1]);
            if s0 < s1 || e0 < e1 || s0 > e1 {
                return Err(Error::Invalid(format!("rows {rows:?} do not form a connected skew shape")));
            }
        }
        for &(s, e) in rows {
            if s == 0 || e < s {
                return Err(Error::Invalid(format!("bad row interval in {rows:?}")));
            }
        }
        Ok(())
    }

    pub fn new(rows: Vec<(u64, u64)>) -> Result<Self> {
        Self::validate(&rows)?;
        Ok(Component { rows })
    }

    /// Builds a component from an arbitrary cell set, normalizing the
    /// translation.
    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Invalid("component has no cells".into()));
        }
        let min_r = cells.iter().map(|c| c.0).min().unwrap();
        let min_c = cells.iter().map(|c| c.1).min().unwrap();
        let mut by_row: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &(r, c) in cells {
            by_row.entry(r - min_r + 1).or_default().push(c - min_c + 1);
        }
        let mut rows = Vec::new();
        for (r, mut cols) in by_row {
            cols.sort_unstable();
            if r != rows.len() as u64 + 1 {
                return Err(Error::Invalid("component rows are not contiguous".into()));
            }
            let (s, e) = (cols[0], *cols.last().unwrap());
            if cols.len() as u64 != e - s + 1 {
                return Err(Error::Invalid("component row is not an interval".into()));
            }
            rows.push((s, e));
        }
        Self::validate(&rows)?;
        Ok(Component { rows })
    }

    pub fn rows(&self) -> &[(u64, u64)] {
        &self.rows
    }

    pub fn size(&self) -> u64 {
        self.rows.iter().map(|&(s, e)| e - s + 1).sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &(s, e)) in self.rows.iter().enumerate() {
            for c in s..=e {
                out.push((i as u64 + 1, c));
            }
        }
        out
    }

    pub fn key(&self) -> String {
        self.rows
            .iter()
            .map(|&(s, e)| format!("{s}:{e}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// A border strip has no 2x2 block: consecutive rows overlap in exactly
    /// one column.
    pub fn is_border_strip(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].0 == w[1].1)
    }

    /// Rows whose corner cell has nothing below or to its right.
    pub fn corner_count(&self) -> u64 {
        let m = self.rows.len();
        (0..m)
            .filter(|&i| i + 1 == m || self.rows[i + 1].1 < self.rows[i].1)
            .count() as u64
    }

    /// Per-diagonal cell of maximal coordinate sum.
    pub fn principal_border_strip(&self) -> Component {
        let mut best: BTreeMap<i64, Cell> = BTreeMap::new();
        for (r, c) in self.cells() {
            let diag = c as i64 - r as i64;
            let entry = best.entry(diag).or_insert((r, c));
            if r + c > entry.0 + entry.1 {
                *entry = (r, c);
            }
        }
        let cells: Vec<Cell> = best.into_values().collect();
        Component::from_cells(&cells).expect("principal border strip is a valid component")
    }

    /// Order-ideal closure above the top-left corner: row `i` widens to
    /// columns `1..=e_i`.
    pub fn young_hull(&self) -> Component {
        let rows = self.rows.iter().map(|&(_, e)| (1, e)).collect();
        Component::new(rows).expect("hull of a component is a partition shape")
    }

    pub fn conjugate(&self) -> Component {
        let cells: Vec<Cell> = self.cells().into_iter().map(|(r, c)| (c, r)).collect();
        Component::from_cells(&cells).expect("transpose of a component is a component")
    }

    /// Canonical embedding as a concrete skew shape.
    pub fn to_skew(&self) -> SkewShape {
        let outer = Partition::from_unsorted(self.rows.iter().map(|&(_, e)| e).collect());
        let inner = Partition::from_unsorted(self.rows.iter().map(|&(s, _)| s - 1).collect());
        SkewShape { outer, inner }
    }
}

/// Ordering used for canonical component lists: size descending, then key.
fn component_order(a: &Component, b: &Component) -> std::cmp::Ordering {
    b.size()
        .cmp(&a.size())
        .then_with(|| a.key().cmp(&b.key()))
}

/// An isomorphism class of skew diagrams: a multiset of normalized connected
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramClass {
    components: Vec<Component>,
}

impl DiagramClass {
    pub fn empty() -> Self {
        DiagramClass { components: Vec::new() }
    }

    pub fn from_components(mut components: Vec<Component>) -> Self {
        components.sort_by(component_order);
        DiagramClass { components }
    }

    pub fn from_component(c: Component) -> Self {
        DiagramClass { components: vec![c] }
    }

    /// The single square.
    pub fn square() -> Self {
        DiagramClass::from_component(Component::new(vec![(1, 1)]).unwrap())
    }

    /// Disjoint union of `k` squares.
    pub fn delta(k: u64) -> Self {
        let sq = Component::new(vec![(1, 1)]).unwrap();
        DiagramClass { components: vec![sq; k as usize] }
    }

    /// The class of a concrete skew shape.
    pub fn classify(shape: &SkewShape) -> Self {
        let comps = shape
            .connected_components()
            .into_iter()
            .map(|cells| Component::from_cells(&cells).expect("component of a skew shape"))
            .collect();
        DiagramClass::from_components(comps)
    }

    /// The class of a straight partition shape.
    pub fn of_partition(p: &Partition) -> Self {
        DiagramClass::classify(&SkewShape::straight(p.clone()))
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Component::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_border_strip(&self) -> bool {
        self.is_connected() && self.components[0].is_border_strip()
    }

    pub fn key(&self) -> String {
        self.components
            .iter()
            .map(Component::key)
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let key = key.trim();
        if key.is_empty() {
            return Ok(DiagramClass::empty());
        }
        let mut comps = Vec::new();
        for comp in key.split('|') {
            let mut rows = Vec::new();
            for row in comp.split(';') {
                let (s, e) = row
                    .split_once(':')
                    .ok_or_else(|| Error::BadClassKey(key.to_string()))?;
                let s = s.trim().parse::<u64>().map_err(|_| Error::BadClassKey(key.to_string()))?;
                let e = e.trim().parse::<u64>().map_err(|_| Error::BadClassKey(key.to_string()))?;
                rows.push((s, e));
            }
            comps.push(Component::new(rows).map_err(|_| Error::BadClassKey(key.to_string()))?);
        }
        Ok(DiagramClass::from_components(comps))
    }

    /// A concrete skew shape in this class; `classify` of the result returns
    /// the class back.
    pub fn representative(&self) -> SkewShape {
        let mut shape = SkewShape::straight(Partition::empty());
        for comp in &self.components {
            shape = shape.disjoint_union(&comp.to_skew());
        }
        shape
    }

    pub fn disjoint_union(&self, other: &DiagramClass) -> DiagramClass {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        DiagramClass::from_components(comps)
    }

    pub fn conjugate(&self) -> DiagramClass {
        DiagramClass::from_components(self.components.iter().map(Component::conjugate).collect())
    }

    /// Principal border strip of a connected class; empty for the empty
    /// class.
    pub fn principal_border_strip(&self) -> Result<DiagramClass> {
        if self.is_empty() {
            return Ok(DiagramClass::empty());
        }
        if !self.is_connected() {
            return Err(Error::Disconnected(self.key()));
        }
        Ok(DiagramClass::from_component(self.components[0].principal_border_strip()))
    }

    /// Young hull of a connected class; empty for the empty class.
    pub fn young_hull(&self) -> Result<DiagramClass> {
        if self.is_empty() {
            return Ok(DiagramClass::empty());
        }
        if !self.is_connected() {
            return Err(Error::Disconnected(self.key()));
        }
        Ok(DiagramClass::from_component(self.components[0].young_hull()))
    }

    /// Whether some partition between the inner and outer shape of a
    /// representative of `other` cuts out this class.
    pub fn is_subclass(&self, other: &DiagramClass) -> bool {
        if self.size() > other.size() {
            return false;
        }
        let rep = other.representative();
        let keep = rep.outer().size() - self.size();
        inners_between(rep.outer(), rep.inner(), keep)
            .iter()
            .any(|gamma| {
                let shape = SkewShape::new(rep.outer().clone(), gamma.clone()).unwrap();
                DiagramClass::classify(&shape) == *self
            })
    }

    /// Distinct connected classes with multiplicities, in canonical order.
    pub fn sorted_decomposition(&self) -> Result<Vec<(DiagramClass, u64)>> {
        if self.is_empty() {
            return Err(Error::EmptyClass);
        }
        let mut out: Vec<(DiagramClass, u64)> = Vec::new();
        for comp in &self.components {
            let class = DiagramClass::from_component(comp.clone());
            match out.last_mut() {
                Some((last, mult)) if *last == class => *mult += 1,
                _ => out.push((class, 1)),
            }
        }
        Ok(out)
    }

    /// Number of removable squares of the class; representative independent.
    pub fn removable_corner_count(&self) -> u64 {
        self.components.iter().map(Component::corner_count).sum()
    }
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// Partitions `gamma` with `inner` contained in `gamma` contained in `outer`
/// and `|gamma| = |outer| - removed`.
pub fn inners_between(outer: &Partition, inner: &Partition, keep: u64) -> Vec<Partition> {
    let total = outer.size();
    if keep > total || keep < inner.size() {
        return Vec::new();
    }
    let removed = total - keep;
    let mut out = Vec::new();
    let mut prefix: Vec<u64> = Vec::new();
    fn rec(
        outer: &Partition,
        inner: &Partition,
        row: usize,
        budget: u64,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if row > outer.len() {
            if budget == 0 {
                out.push(Partition::from_unsorted(prefix.clone()));
            }
            return;
        }
        let upper = if row == 1 {
            outer.part(1)
        } else {
            prefix[row - 2].min(outer.part(row))
        };
        let lo = inner.part(row).max(outer.part(row).saturating_sub(budget));
        if lo > upper {
            return;
        }
        for v in lo..=upper {
            let used = outer.part(row) - v;
            prefix.push(v);
            rec(outer, inner, row + 1, budget - used, prefix, out);
            prefix.pop();
        }
    }
    rec(outer, inner, 1, removed, &mut prefix, &mut out);
    out
}

/// 180 degree rotation of a partition diagram, as a skew shape with the same
/// skew character.
pub fn rotate_180(alpha: &Partition) -> SkewShape {
    if alpha.is_empty() {
        return SkewShape::straight(Partition::empty());
    }
    let t = alpha.len();
    let a1 = alpha.part(1);
    let outer = Partition::rectangle(a1, t as u64);
    let inner = Partition::from_unsorted((2..=t).rev().map(|j| a1 - alpha.part(j)).collect());
    SkewShape::new(outer, inner).expect("rotation fits in its rectangle")
}

/// All connected components of a given size, canonically ordered.
fn connected_components_of_size(k: u64) -> Vec<Component> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    // row sizes top to bottom
    let mut sizes: Vec<u64> = Vec::new();
    fn split(remaining: u64, sizes: &mut Vec<u64>, out: &mut Vec<Component>) {
        if remaining == 0 {
            assemble(sizes, out);
            return;
        }
        for next in 1..=remaining {
            sizes.push(next);
            split(remaining - next, sizes, out);
            sizes.pop();
        }
    }
    // choose start columns bottom-up
    fn assemble(sizes: &[u64], out: &mut Vec<Component>) {
        let m = sizes.len();
        let mut rows: Vec<(u64, u64)> = vec![(0, 0); m];
        fn rec(sizes: &[u64], i: usize, rows: &mut Vec<(u64, u64)>, out: &mut Vec<Component>) {
            if i == 0 {
                out.push(Component::new(rows.clone()).expect("constructed rows are valid"));
                return;
            }
            let idx = i - 1;
            let len = sizes[idx];
            if i == sizes.len() {
                rows[idx] = (1, len);
                rec(sizes, idx, rows, out);
                return;
            }
            let below = rows[idx + 1];
            let lo = below.0.max((below.1 + 1).saturating_sub(len));
            for s in lo..=below.1 {
                rows[idx] = (s, s + len - 1);
                rec(sizes, idx, rows, out);
            }
        }
        rec(sizes, m, &mut rows, out);
    }
    split(k, &mut sizes, &mut out);
    out.sort_by(component_order);
    out
}

/// All diagram classes of size `k`: connected classes first, each group
/// ordered by key.
pub fn enumerate_classes(k: u64, connected_only: bool) -> Vec<DiagramClass> {
    if k == 0 {
        return if connected_only { Vec::new() } else { vec![DiagramClass::empty()] };
    }
    let connected: Vec<Vec<Component>> =
        (0..=k).map(connected_components_of_size).collect();
    let mut out: Vec<DiagramClass> = connected[k as usize]
        .iter()
        .cloned()
        .map(DiagramClass::from_component)
        .collect();
    out.sort_by_key(|c| c.key());
    if connected_only {
        return out;
    }
    // multisets of at least two connected components with total size k:
    // walk a global list in canonical order, choosing a non-increasing
    // sequence of indices.
    let mut pool: Vec<Component> = Vec::new();
    for s in (1..=k).rev() {
        pool.extend(connected[s as usize].iter().cloned());
    }
    let mut multi: Vec<DiagramClass> = Vec::new();
    let mut chosen: Vec<Component> = Vec::new();
    fn rec(
        pool: &[Component],
        start: usize,
        budget: u64,
        chosen: &mut Vec<Component>,
        multi: &mut Vec<DiagramClass>,
    ) {
        if budget == 0 {
            if chosen.len() >= 2 {
                multi.push(DiagramClass::from_components(chosen.clone()));
            }
            return;
        }
        for i in start..pool.len() {
            let sz = pool[i].size();
            if sz > budget {
                continue;
            }
            chosen.push(pool[i].clone());
            rec(pool, i, budget - sz, chosen, multi);
            chosen.pop();
        }
    }
    rec(&pool, 0, k, &mut chosen, &mut multi);
    multi.sort_by_key(|c| c.key());
    out.extend(multi);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[u64], inner: &[u64]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    fn class_of(outer: &[u64], inner: &[u64]) -> DiagramClass {
        DiagramClass::classify(&skew(outer, inner))
    }

    #[test]
    fn make_skew_validates_containment() {
        let s = skew(&[3, 2, 1], &[1, 1]);
        assert_eq!(s.size(), 4);
        assert!(SkewShape::new(p(&[3, 2]), p(&[3, 3])).is_err());
        let lam = p(&[4, 2]);
        let empty = SkewShape::new(lam.clone(), lam).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn component_counts() {
        assert_eq!(skew(&[3, 2, 1], &[1, 1]).connected_components().len(), 2);
        assert_eq!(skew(&[5, 3, 3, 2], &[4, 3, 1, 1]).connected_components().len(), 2);
        assert_eq!(skew(&[4, 2, 1], &[]).connected_components().len(), 1);
    }

    #[test]
    fn classify_identifies_isomorphic_diagrams() {
        assert_eq!(class_of(&[3, 2, 1], &[1, 1]), class_of(&[5, 3, 3, 2], &[4, 3, 1, 1]));
        assert!(class_of(&[2, 2], &[2, 2]).is_empty());
        assert_eq!(class_of(&[2, 1], &[]).key(), "1:2;1:1");
    }

    #[test]
    fn keys_round_trip() {
        for k in 0..=5u64 {
            for class in enumerate_classes(k, false) {
                assert_eq!(DiagramClass::parse_key(&class.key()).unwrap(), class);
            }
        }
        assert!(DiagramClass::parse_key("2:1").is_err());
        assert!(DiagramClass::parse_key("1:2;2:3").is_err());
    }

    #[test]
    fn representative_round_trips() {
        for k in 0..=5u64 {
            for class in enumerate_classes(k, false) {
                let rep = class.representative();
                assert_eq!(DiagramClass::classify(&rep), class, "key {}", class.key());
            }
        }
    }

    #[test]
    fn disjoint_union_matches_worked_example() {
        let u = skew(&[3, 2, 1], &[1, 1]).disjoint_union(&skew(&[4, 2], &[1]));
        assert_eq!(u.outer(), &p(&[7, 5, 3, 2, 1]));
        assert_eq!(u.inner(), &p(&[4, 3, 1, 1]));
    }

    #[test]
    fn disjoint_union_is_commutative_on_classes() {
        let a = class_of(&[2], &[]);
        let b = class_of(&[2, 2], &[1]);
        let e = DiagramClass::empty();
        assert_eq!(a.disjoint_union(&b), b.disjoint_union(&a));
        assert_eq!(a.disjoint_union(&e), a);
    }

    #[test]
    fn principal_border_strip_examples() {
        // a border strip is its own principal strip
        let gamma = class_of(&[2, 2], &[1]);
        assert_eq!(gamma.principal_border_strip().unwrap(), gamma);
        // the 2x2 block reduces to the strip (2,2)/(1)
        let block = class_of(&[2, 2], &[]);
        assert_eq!(block.principal_border_strip().unwrap(), gamma);
        assert!(DiagramClass::delta(2).principal_border_strip().is_err());
        assert_eq!(DiagramClass::empty().principal_border_strip().unwrap(), DiagramClass::empty());
    }

    #[test]
    fn young_hull_examples() {
        let gamma = class_of(&[2, 2], &[1]);
        assert_eq!(gamma.young_hull().unwrap(), class_of(&[2, 2], &[]));
        let part = class_of(&[3, 1], &[]);
        assert_eq!(part.young_hull().unwrap(), part);
    }

    #[test]
    fn hull_strip_round_trip_on_border_strips() {
        for k in 1..=6u64 {
            for class in enumerate_classes(k, true) {
                if class.is_border_strip() {
                    let hull = class.young_hull().unwrap();
                    assert_eq!(hull.principal_border_strip().unwrap(), class);
                }
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let hh = class_of(&[2], &[]);
        let vv = class_of(&[1, 1], &[]);
        assert_eq!(hh.conjugate(), vv);
        assert_eq!(vv.conjugate(), hh);
        assert_eq!(DiagramClass::delta(3).conjugate(), DiagramClass::delta(3));
        let k21 = class_of(&[2, 1], &[]);
        assert_eq!(k21.conjugate(), k21);
    }

    #[test]
    fn conjugate_commutes_with_union() {
        for ka in 1..=2u64 {
            for kb in 1..=2u64 {
                for a in enumerate_classes(ka, false) {
                    for b in enumerate_classes(kb, false) {
                        assert_eq!(
                            a.disjoint_union(&b).conjugate(),
                            a.conjugate().disjoint_union(&b.conjugate())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subclass_examples() {
        let hh = class_of(&[2], &[]);
        let gamma = class_of(&[2, 2], &[1]);
        let k21 = class_of(&[2, 1], &[]);
        assert!(hh.is_subclass(&gamma));
        assert!(!hh.is_subclass(&k21));
        assert!(DiagramClass::empty().is_subclass(&k21));
    }

    #[test]
    fn class_census() {
        assert_eq!(enumerate_classes(1, false).len(), 1);
        assert_eq!(enumerate_classes(1, true).len(), 1);
        assert_eq!(enumerate_classes(2, false).len(), 3);
        assert_eq!(enumerate_classes(2, true).len(), 2);
        assert_eq!(enumerate_classes(3, false).len(), 7);
        assert_eq!(enumerate_classes(3, true).len(), 4);
        assert_eq!(enumerate_classes(4, false).len(), 19);
        assert_eq!(enumerate_classes(4, true).len(), 9);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_ordered() {
        for k in 1..=5u64 {
            let all = enumerate_classes(k, false);
            let mut keys: Vec<String> = all.iter().map(|c| c.key()).collect();
            let n = keys.len();
            keys.dedup();
            assert_eq!(keys.len(), n);
            let first_disconnected = all.iter().position(|c| !c.is_connected());
            if let Some(idx) = first_disconnected {
                assert!(all[idx..].iter().all(|c| !c.is_connected()));
            }
            for c in &all {
                assert_eq!(c.size(), k);
            }
        }
    }

    #[test]
    fn sorted_decomposition_examples() {
        let hh = class_of(&[2], &[]);
        let d = DiagramClass::delta(2).disjoint_union(&hh);
        let dec = d.sorted_decomposition().unwrap();
        assert_eq!(dec, vec![(hh.clone(), 1), (DiagramClass::square(), 2)]);
        assert_eq!(
            DiagramClass::delta(3).sorted_decomposition().unwrap(),
            vec![(DiagramClass::square(), 3)]
        );
        let gamma = class_of(&[2, 2], &[1]);
        assert_eq!(gamma.sorted_decomposition().unwrap(), vec![(gamma.clone(), 1)]);
        assert!(DiagramClass::empty().sorted_decomposition().is_err());
    }

    #[test]
    fn corner_counts() {
        assert_eq!(skew(&[4, 3, 2, 2], &[3, 3]).removable_corner_count(), 2);
        assert_eq!(class_of(&[4, 3, 2, 2], &[]).removable_corner_count(), 3);
        assert_eq!(DiagramClass::delta(4).removable_corner_count(), 4);
        assert_eq!(class_of(&[2, 1], &[]).removable_corner_count(), 2);
        assert_eq!(class_of(&[2, 2], &[1]).removable_corner_count(), 1);
    }

    #[test]
    fn corner_count_matches_class_rule_on_shapes() {
        for k in 1..=5u64 {
            for class in enumerate_classes(k, false) {
                let rep = class.representative();
                assert_eq!(rep.removable_corner_count(), class.removable_corner_count());
            }
        }
    }

    #[test]
    fn rotate_examples() {
        let r = rotate_180(&p(&[2, 1]));
        assert_eq!(r.outer(), &p(&[2, 2]));
        assert_eq!(r.inner(), &p(&[1]));
        assert_eq!(rotate_180(&p(&[3])).outer(), &p(&[3]));
        assert!(rotate_180(&p(&[3])).inner().is_empty());
        assert!(rotate_180(&p(&[1, 1])).inner().is_empty());
        assert_eq!(rotate_180(&p(&[1, 1])).outer(), &p(&[1, 1]));
    }

    #[test]
    fn border_strip_iff_principal_strip_fixed() {
        for k in 1..=5u64 {
            for class in enumerate_classes(k, true) {
                let fixed = class.principal_border_strip().unwrap() == class;
                assert_eq!(class.is_border_strip(), fixed, "key {}", class.key());
            }
        }
    }
}
