//! Maximum intersecting subfamilies as maximum cliques.
//!
//! Members of a family are the vertices of the *compatibility graph*, two
//! members being adjacent when they intersect. An intersecting subfamily is a
//! clique there. The search is a bit-parallel branch and bound in the style of
//! MCQ/BBMC: candidates are greedily coloured into classes of pairwise
//! disjoint members and the colour count bounds the clique that can still be
//! added. The count is tightened as in MaxCLQ: unit propagation over the
//! classes finds groups of classes that cannot all contribute a member, and
//! each such group lowers the bound by one.
//!
//! In anomalous mode the intersection of the chosen members is carried along
//! and only cliques whose members have empty common intersection are
//! recorded. While that intersection is nonempty, the search branches on
//! which candidate avoids one of its vertices, picking the vertex with the
//! fewest candidates avoiding it.
//!
//! Symmetric families (all r-sets of `E_n`, blow-ups of complete graphs) are
//! handled with orbital branching over *interchangeable* ground vertices:
//! `x` and `y` are interchangeable when swapping them maps the family onto
//! itself. Two interchangeable vertices lying in exactly the same chosen
//! members can still be swapped without disturbing the partial solution, so
//! after branching on a member the whole orbit of that member under those
//! swaps is dropped from the candidates, not just the member itself.

use std::collections::HashSet;

use crate::graph::{VertexSet, MAX_ORDER};

type Row = Vec<u64>;

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn clear_bit(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

fn first_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Result of one search: the clique size and its members as indices into the
/// input slice, sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Clique {
    pub size: usize,
    pub members: Vec<usize>,
}

/// Search statistics, mostly for benchmarks and examples.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

pub(crate) struct IntersectingSearch {
    /// Members in search order.
    sets: Vec<VertexSet>,
    /// Search position → input index.
    order: Vec<usize>,
    words: usize,
    /// Compatibility rows in search order.
    rows: Vec<Row>,
    /// `avoid[x]`: positions of members not containing ground vertex `x`.
    avoid: Vec<Row>,
    anomalous: bool,
    /// Classes of interchangeable ground vertices with at least two elements.
    classes: Vec<VertexSet>,
    best_size: usize,
    best: Vec<usize>,
    found: bool,
    stats: SearchStats,
}

impl IntersectingSearch {
    pub(crate) fn new(members: &[VertexSet], anomalous: bool) -> Self {
        let n = members.len();
        // Highest compatibility degree first; ties keep input order.
        let degree: Vec<usize> = members
            .iter()
            .map(|a| members.iter().filter(|b| a.meets(**b)).count())
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(degree[i]));

        let sets: Vec<VertexSet> = order.iter().map(|&i| members[i]).collect();
        let words = words_for(n);
        let mut rows = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in i + 1..n {
                if sets[i].meets(sets[j]) {
                    set_bit(&mut rows[i], j);
                    set_bit(&mut rows[j], i);
                }
            }
        }
        let mut avoid = Vec::new();
        if anomalous {
            avoid = vec![vec![0u64; words]; MAX_ORDER];
            let support = sets.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
            for x in support.iter() {
                for (i, s) in sets.iter().enumerate() {
                    if !s.contains(x) {
                        set_bit(&mut avoid[x], i);
                    }
                }
            }
        }
        let classes = interchangeable_classes(members);
        IntersectingSearch {
            sets,
            order,
            words,
            rows,
            avoid,
            anomalous,
            classes,
            best_size: 0,
            best: Vec::new(),
            found: false,
            stats: SearchStats::default(),
        }
    }

    /// Declares an already-known solution (input indices). The search then
    /// only looks for strictly larger cliques.
    pub(crate) fn seed(&mut self, members: &[usize]) {
        if members.len() > self.best_size || !self.found {
            let mut m = members.to_vec();
            m.sort_unstable();
            self.best_size = m.len();
            self.best = m;
            self.found = true;
        }
    }

    pub(crate) fn run(mut self) -> (Option<Clique>, SearchStats) {
        let n = self.sets.len();
        let mut cand = vec![0u64; self.words];
        for i in 0..n {
            set_bit(&mut cand, i);
        }
        let mut clique = Vec::new();
        let cells = self.classes.clone();
        self.expand(&mut clique, VertexSet::full(MAX_ORDER), &cells, cand);
        let stats = self.stats;
        let result = self.found.then_some(Clique {
            size: self.best_size,
            members: self.best,
        });
        (result, stats)
    }

    /// Greedy sequential colouring of `cand` into classes of pairwise
    /// disjoint members, in colour order.
    fn colour_classes(&self, cand: &[u64]) -> Vec<Vec<usize>> {
        let mut classes = Vec::new();
        let mut uncoloured = cand.to_vec();
        while !is_empty(&uncoloured) {
            let mut class_bits = uncoloured.clone();
            let mut class = Vec::new();
            while let Some(v) = first_bit(&class_bits) {
                clear_bit(&mut class_bits, v);
                clear_bit(&mut uncoloured, v);
                for (c, r) in class_bits.iter_mut().zip(&self.rows[v]) {
                    *c &= !r;
                }
                class.push(v);
            }
            classes.push(class);
        }
        classes
    }

    fn record(&mut self, clique: &[usize]) {
        self.best_size = clique.len();
        let mut members: Vec<usize> = clique.iter().map(|&p| self.order[p]).collect();
        members.sort_unstable();
        self.best = members;
        self.found = true;
    }

    /// Drops from `cand` every member in the orbit of position `v` under the
    /// permutations within `cells`.
    /// Returns how many members were removed.
    fn remove_orbit(&self, v: usize, cells: &[VertexSet], cand: &mut [u64]) -> usize {
        clear_bit(cand, v);
        let mut removed = 1;
        let rep = self.sets[v];
        let moved: Vec<VertexSet> = cells
            .iter()
            .copied()
            .filter(|c| c.meets(rep) && !c.is_subset(rep))
            .collect();
        if moved.is_empty() {
            // `rep` is a union of whole cells and cell-free vertices: a fixed point.
            return removed;
        }
        let movable = moved.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c));
        let fixed_part = rep.difference(movable);
        let profile: Vec<usize> = moved.iter().map(|c| c.intersection(rep).len()).collect();
        for (w, word) in cand.iter_mut().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let u = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let s = self.sets[u];
                if s.difference(movable) == fixed_part
                    && moved
                        .iter()
                        .zip(&profile)
                        .all(|(c, &k)| c.intersection(s).len() == k)
                {
                    *word &= !(1 << (u % 64));
                    removed += 1;
                }
            }
        }
        removed
    }

    /// `cells` are the blocks of interchangeable ground vertices that every
    /// chosen member either contains or misses entirely; permuting inside a
    /// cell fixes every chosen member and maps `cand` onto itself.
    fn expand(
        &mut self,
        clique: &mut Vec<usize>,
        common: VertexSet,
        cells: &[VertexSet],
        mut cand: Row,
    ) {
        self.stats.nodes += 1;
        if self.anomalous && !clique.is_empty() && !common.is_empty() {
            self.expand_forced(clique, common, cells, cand);
            return;
        }
        'recolour: loop {
            let classes = self.colour_classes(&cand);
            let room = self.best_size.saturating_sub(clique.len());
            if classes.len() <= room {
                return;
            }
            // Classes before `boundary` together hold at most `room` clique vertices.
            let boundary = UnitPropagation::new(self, &cand, &classes).absorb(room);
            for (ci, class) in classes.iter().enumerate().skip(boundary).rev() {
                for &v in class.iter().rev() {
                    if !test_bit(&cand, v) {
                        continue;
                    }
                    if clique.len() + room + (ci + 1 - boundary) <= self.best_size {
                        return;
                    }
                    self.branch(v, clique, common, cells, &cand);
                    if self.remove_orbit(v, cells, &mut cand) > 1 {
                        // A whole orbit went; a fresh colouring is usually much tighter.
                        continue 'recolour;
                    }
                }
            }
            return;
        }
    }

    /// Anomalous mode with a nonempty running intersection: some later member
    /// has to avoid each of its vertices, so branch on which candidate avoids
    /// the vertex with the fewest such candidates.
    fn expand_forced(
        &mut self,
        clique: &mut Vec<usize>,
        common: VertexSet,
        cells: &[VertexSet],
        mut cand: Row,
    ) {
        loop {
            let mut pick: Option<(usize, Row)> = None;
            for x in common.iter() {
                let options: Row = cand
                    .iter()
                    .zip(&self.avoid[x])
                    .map(|(c, a)| c & a)
                    .collect();
                let count: u32 = options.iter().map(|w| w.count_ones()).sum();
                if count == 0 {
                    return;
                }
                if pick.as_ref().is_none_or(|(k, _)| count < *k as u32) {
                    pick = Some((count as usize, options));
                }
            }
            let Some((_, options)) = pick else { return };
            let classes = self.colour_classes(&cand);
            let room = self.best_size.saturating_sub(clique.len());
            if classes.len() <= room
                || UnitPropagation::new(self, &cand, &classes).absorb(room) == classes.len()
            {
                return;
            }
            let v = first_bit(&options).expect("nonempty options");
            self.branch(v, clique, common, cells, &cand);
            self.remove_orbit(v, cells, &mut cand);
        }
    }

    /// Explores every clique containing `clique + v` within `cand`.
    fn branch(
        &mut self,
        v: usize,
        clique: &mut Vec<usize>,
        common: VertexSet,
        cells: &[VertexSet],
        cand: &[u64],
    ) {
        let set = self.sets[v];
        let next_common = common.intersection(set);
        clique.push(v);
        let valid = !self.anomalous || next_common.is_empty();
        if valid && clique.len() > self.best_size {
            self.record(clique);
        }
        let next: Row = cand.iter().zip(&self.rows[v]).map(|(c, r)| c & r).collect();
        if !is_empty(&next) {
            let split: Vec<VertexSet> = cells
                .iter()
                .flat_map(|c| [c.intersection(set), c.difference(set)])
                .filter(|c| c.len() >= 2)
                .collect();
            self.expand(clique, next_common, &split, next);
        }
        clique.pop();
    }
}

/// MaxSAT-style reasoning over colour classes: each class is a soft clause
/// ("take one of these members"), disjoint members are mutually exclusive.
/// A set of classes from which unit propagation derives an empty class
/// cannot all contribute to one clique, so the classes' bound drops by one.
struct UnitPropagation<'a> {
    search: &'a IntersectingSearch,
    cand: &'a [u64],
    classes: &'a [Vec<usize>],
    class_of: Vec<usize>,
    used: Vec<bool>,
    // Scratch state of one propagation run.
    removed: Vec<bool>,
    alive: Vec<usize>,
    assigned: Vec<bool>,
    reasons: Vec<Vec<usize>>,
    touched: Vec<usize>,
}

const NO_CLASS: usize = usize::MAX;

impl<'a> UnitPropagation<'a> {
    fn new(search: &'a IntersectingSearch, cand: &'a [u64], classes: &'a [Vec<usize>]) -> Self {
        let n = search.sets.len();
        let mut class_of = vec![NO_CLASS; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = c;
            }
        }
        let m = classes.len();
        UnitPropagation {
            search,
            cand,
            classes,
            class_of,
            used: vec![false; m],
            removed: vec![false; n],
            alive: classes.iter().map(Vec::len).collect(),
            assigned: vec![false; m],
            reasons: vec![Vec::new(); m],
            touched: Vec::new(),
        }
    }

    /// Extends the prefix of classes bounded by `room` for as long as every
    /// added class can be paired with a fresh inconsistent subset. Returns the
    /// prefix length.
    fn absorb(&mut self, room: usize) -> usize {
        let m = self.classes.len();
        let mut boundary = room;
        while boundary < m {
            match self.find_inconsistent(boundary) {
                Some(set) => {
                    for c in set {
                        self.used[c] = true;
                    }
                    boundary += 1;
                }
                None => break,
            }
        }
        boundary
    }

    /// Looks for an inconsistent set among unused classes `0..=upto`, first by
    /// propagating unit classes, then by failed-literal tests on class `upto`.
    fn find_inconsistent(&mut self, upto: usize) -> Option<Vec<usize>> {
        for c in (0..=upto).rev() {
            if !self.used[c] && self.classes[c].len() == 1 {
                if let Some(set) = self.propagate(upto, c, self.classes[c][0]) {
                    return Some(set);
                }
            }
        }
        let tested = &self.classes[upto];
        if self.used[upto] || tested.len() == 1 || tested.len() > 8 {
            return None;
        }
        let mut union = vec![upto];
        for &v in tested {
            union.extend(self.propagate(upto, upto, v)?);
        }
        union.sort_unstable();
        union.dedup();
        Some(union)
    }

    fn reset(&mut self) {
        for c in self.touched.drain(..) {
            self.alive[c] = self.classes[c].len();
            self.assigned[c] = false;
            self.reasons[c].clear();
            for &v in &self.classes[c] {
                self.removed[v] = false;
            }
        }
    }

    fn touch(&mut self, c: usize) {
        if !self.assigned[c] && self.reasons[c].is_empty() {
            self.touched.push(c);
        }
    }

    /// Assumes member `v` of class `start` is chosen and propagates. On a
    /// conflict returns the classes involved in deriving it.
    fn propagate(&mut self, upto: usize, start: usize, v: usize) -> Option<Vec<usize>> {
        let rows = &self.search.rows;
        let mut queue = vec![(start, v)];
        let mut conflict = None;
        'outer: while let Some((c, v)) = queue.pop() {
            if self.assigned[c] {
                continue;
            }
            self.touch(c);
            self.assigned[c] = true;
            for (w, (&cw, &rw)) in self.cand.iter().zip(&rows[v]).enumerate() {
                let mut bits = cw & !rw;
                while bits != 0 {
                    let u = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let d = self.class_of[u];
                    if u == v || d > upto || self.used[d] || self.assigned[d] || self.removed[u] {
                        continue;
                    }
                    self.touch(d);
                    self.removed[u] = true;
                    self.alive[d] -= 1;
                    self.reasons[d].push(c);
                    match self.alive[d] {
                        0 => {
                            conflict = Some(d);
                            break 'outer;
                        }
                        1 => {
                            let last = *self.classes[d]
                                .iter()
                                .find(|&&x| !self.removed[x])
                                .expect("one left");
                            queue.push((d, last));
                        }
                        _ => {}
                    }
                }
            }
        }
        let result = conflict.map(|d| {
            let mut seen = vec![d];
            let mut stack = vec![d];
            while let Some(x) = stack.pop() {
                for &r in &self.reasons[x] {
                    if !seen.contains(&r) {
                        seen.push(r);
                        stack.push(r);
                    }
                }
            }
            if !seen.contains(&start) {
                seen.push(start);
            }
            seen
        });
        self.reset();
        result
    }
}

/// Partitions the ground vertices into classes of vertices whose pairwise
/// transpositions map `members` onto itself; only classes of size >= 2 are
/// returned. Transposition symmetry is an equivalence relation, so testing
/// against one representative per class suffices.
pub(crate) fn interchangeable_classes(members: &[VertexSet]) -> Vec<VertexSet> {
    let lookup: HashSet<VertexSet> = members.iter().copied().collect();
    let support = members
        .iter()
        .fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
    let mut degree = [0usize; MAX_ORDER];
    for s in members {
        for x in s.iter() {
            degree[x] += 1;
        }
    }
    let swap_preserves = |x: usize, y: usize| {
        members.iter().all(|&s| {
            if s.contains(x) == s.contains(y) {
                return true;
            }
            let mut t = s;
            if s.contains(x) {
                t.remove(x);
                t.insert(y);
            } else {
                t.remove(y);
                t.insert(x);
            }
            lookup.contains(&t)
        })
    };
    let mut classes: Vec<VertexSet> = Vec::new();
    for y in support.iter() {
        let home = classes.iter_mut().find(|c| {
            let rep = c.first().expect("classes are nonempty");
            degree[rep] == degree[y] && swap_preserves(rep, y)
        });
        match home {
            Some(c) => c.insert(y),
            None => classes.push(VertexSet::singleton(y)),
        }
    }
    classes.retain(|c| c.len() >= 2);
    classes
}

/// Maximum clique of the compatibility graph of `members` (largest
/// intersecting subfamily), optionally seeded with a known intersecting
/// subfamily given by input indices.
pub(crate) fn max_intersecting(
    members: &[VertexSet],
    seed: Option<&[usize]>,
) -> (Clique, SearchStats) {
    let mut search = IntersectingSearch::new(members, false);
    if let Some(s) = seed {
        search.seed(s);
    }
    let (best, stats) = search.run();
    (
        best.unwrap_or(Clique {
            size: 0,
            members: Vec::new(),
        }),
        stats,
    )
}

/// Largest intersecting subfamily with empty common intersection, if any.
pub(crate) fn max_anomalous(
    members: &[VertexSet],
    seed: Option<&[usize]>,
) -> (Option<Clique>, SearchStats) {
    let mut search = IntersectingSearch::new(members, true);
    if let Some(s) = seed {
        search.seed(s);
    }
    search.run()
}
