//! Oriented blackboard-framed link diagrams.
//!
//! A crossing is stored in PD order `X(a,b,c,d)`: the four incident edges
//! listed counterclockwise starting at the incoming under-strand. The
//! under-strand runs `a -> c`; the over-strand runs `d -> b` at a positive
//! crossing and `b -> d` at a negative one, which is exactly how signs are
//! recovered from orientations. Crossingless unknot components cannot be
//! expressed in PD notation and are kept as a separate loop count.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type EdgeId = u32;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub sign: Sign,
    /// PD order: `[a, b, c, d]`.
    pub edges: [EdgeId; 4],
}

impl Crossing {
    /// Slot indices paired by the two smoothings. `true` pairs `(a-b)(c-d)`,
    /// `false` pairs `(a-d)(b-c)`.
    pub fn smoothing_pairs(choice: bool) -> [(usize, usize); 2] {
        if choice {
            [(0, 1), (2, 3)]
        } else {
            [(0, 3), (1, 2)]
        }
    }

    /// The smoothing choice that respects both strand orientations.
    pub fn oriented_choice(&self) -> bool {
        self.sign == Sign::Pos
    }

    /// Incoming/outgoing roles per slot: `true` = edge points into the
    /// crossing at this slot.
    fn slot_incoming(&self) -> [bool; 4] {
        match self.sign {
            Sign::Pos => [true, false, false, true],
            Sign::Neg => [true, true, false, false],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagError {
    Parse(String),
    EdgeCount(EdgeId, usize),
    InconsistentOrientation(String),
    UnknownComponent(usize),
}

impl fmt::Display for DiagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagError::Parse(msg) => write!(f, "parse error: {}", msg),
            DiagError::EdgeCount(e, n) => {
                write!(f, "edge {} occurs {} times, expected 2", e, n)
            }
            DiagError::InconsistentOrientation(msg) => {
                write!(f, "inconsistent orientation assignment: {}", msg)
            }
            DiagError::UnknownComponent(c) => write!(f, "unknown component index {}", c),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    /// Component index per edge; strand components precede loop components.
    edge_component: BTreeMap<EdgeId, usize>,
    n_strand_components: usize,
}

/// Selection of components for [`Diagram::sublink`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SublinkSelector {
    pub kept_components: BTreeSet<usize>,
}

impl Diagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagError> {
        // every edge exactly twice
        let mut occ: BTreeMap<EdgeId, usize> = BTreeMap::new();
        for x in &crossings {
            for &e in &x.edges {
                *occ.entry(e).or_insert(0) += 1;
            }
        }
        for (&e, &n) in &occ {
            if n != 2 {
                return Err(DiagError::EdgeCount(e, n));
            }
        }
        // orientation consistency: each edge once incoming, once outgoing
        let mut flow: BTreeMap<EdgeId, (usize, usize)> = BTreeMap::new();
        for x in &crossings {
            let inc = x.slot_incoming();
            for (slot, &e) in x.edges.iter().enumerate() {
                let entry = flow.entry(e).or_insert((0, 0));
                if inc[slot] {
                    entry.0 += 1;
                } else {
                    entry.1 += 1;
                }
            }
        }
        for (&e, &(ins, outs)) in &flow {
            if ins != 1 || outs != 1 {
                return Err(DiagError::InconsistentOrientation(format!(
                    "edge {} has {} heads and {} tails",
                    e, ins, outs
                )));
            }
        }
        // component partition: union along both strands of each crossing
        let mut uf = UnionFind::new();
        for x in &crossings {
            uf.union(x.edges[0], x.edges[2]);
            uf.union(x.edges[1], x.edges[3]);
        }
        let mut reps: Vec<EdgeId> = Vec::new();
        let mut edge_component = BTreeMap::new();
        for &e in occ.keys() {
            let r = uf.find(e);
            if !reps.contains(&r) {
                reps.push(r);
            }
        }
        // order components by minimal edge label
        let mut comp_min: Vec<(EdgeId, EdgeId)> = reps.iter().map(|&r| (r, r)).collect();
        for &e in occ.keys() {
            let r = uf.find(e);
            for cm in comp_min.iter_mut() {
                if cm.0 == r && e < cm.1 {
                    cm.1 = e;
                }
            }
        }
        comp_min.sort_by_key(|&(_, min)| min);
        let comp_index: BTreeMap<EdgeId, usize> = comp_min
            .iter()
            .enumerate()
            .map(|(i, &(r, _))| (r, i))
            .collect();
        for &e in occ.keys() {
            edge_component.insert(e, comp_index[&uf.find(e)]);
        }
        Ok(Diagram {
            n_strand_components: reps.len(),
            crossings,
            free_loops,
            edge_component,
        })
    }

    pub fn unknot() -> Self {
        Diagram::new(Vec::new(), 1).unwrap()
    }

    pub fn unlink(components: usize) -> Self {
        Diagram::new(Vec::new(), components).unwrap()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|x| x.sign == Sign::Pos).count()
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.iter().filter(|x| x.sign == Sign::Neg).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    /// Total number of link components, crossingless loops included.
    pub fn n_components(&self) -> usize {
        self.n_strand_components + self.free_loops
    }

    /// Component index of an edge; loop components occupy the indices
    /// `n_strand_components..n_components`.
    pub fn component_of(&self, e: EdgeId) -> Option<usize> {
        self.edge_component.get(&e).copied()
    }

    /// Writhe restricted to crossings where both strands lie on the given
    /// component (self-crossings).
    pub fn self_writhe(&self, comp: usize) -> i64 {
        self.crossings
            .iter()
            .filter(|x| {
                self.edge_component[&x.edges[0]] == comp && self.edge_component[&x.edges[1]] == comp
            })
            .map(|x| x.sign.value())
            .sum()
    }

    /// Circle count of the smoothing selected by `choice` (one bit per
    /// crossing), free loops included.
    pub fn resolution_circles(&self, choice: impl Fn(usize) -> bool) -> ResolvedState {
        let mut uf = UnionFind::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s1, s2) in Crossing::smoothing_pairs(choice(i)) {
                uf.union(x.edges[s1], x.edges[s2]);
            }
        }
        let mut circle_of = BTreeMap::new();
        let mut reps: Vec<EdgeId> = Vec::new();
        for &e in self.edge_component.keys() {
            let r = uf.find(e);
            if !reps.contains(&r) {
                reps.push(r);
            }
        }
        reps.sort_unstable();
        for &e in self.edge_component.keys() {
            let r = uf.find(e);
            circle_of.insert(e, reps.iter().position(|&x| x == r).unwrap());
        }
        ResolvedState {
            n_circles: reps.len() + self.free_loops,
            strand_circles: reps.len(),
            circle_of,
        }
    }

    /// Seifert data of the oriented resolution: circle count `k` and the
    /// Euler characteristic `k - n` of the associated Seifert surface.
    pub fn seifert_data(&self) -> (usize, i64) {
        let signs: Vec<bool> = self.crossings.iter().map(|x| x.oriented_choice()).collect();
        let k = self.resolution_circles(|i| signs[i]).n_circles;
        (k, k as i64 - self.crossings.len() as i64)
    }

    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges;
                match x.sign {
                    Sign::Pos => Crossing {
                        sign: Sign::Neg,
                        edges: [d, a, b, c],
                    },
                    Sign::Neg => Crossing {
                        sign: Sign::Pos,
                        edges: [b, c, d, a],
                    },
                }
            })
            .collect();
        Diagram::new(crossings, self.free_loops).expect("mirror of a valid diagram is valid")
    }

    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let offset = self
            .edge_component
            .keys()
            .max()
            .map(|&e| e + 1)
            .unwrap_or(1);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing {
            sign: x.sign,
            edges: [
                x.edges[0] + offset,
                x.edges[1] + offset,
                x.edges[2] + offset,
                x.edges[3] + offset,
            ],
        }));
        Diagram::new(crossings, self.free_loops + other.free_loops).expect("union is valid")
    }

    /// Restriction to the selected components. Crossings between a kept and a
    /// removed component are smoothed through along the kept strand.
    pub fn sublink(&self, sel: &SublinkSelector) -> Result<Diagram, DiagError> {
        for &c in &sel.kept_components {
            if c >= self.n_components() {
                return Err(DiagError::UnknownComponent(c));
            }
        }
        let kept = |e: EdgeId| sel.kept_components.contains(&self.edge_component[&e]);
        let mut uf = UnionFind::new();
        let mut surviving: Vec<Crossing> = Vec::new();
        for x in &self.crossings {
            let under_kept = kept(x.edges[0]);
            let over_kept = kept(x.edges[1]);
            match (under_kept, over_kept) {
                (true, true) => surviving.push(*x),
                (true, false) => uf.union(x.edges[0], x.edges[2]),
                (false, true) => uf.union(x.edges[1], x.edges[3]),
                (false, false) => {}
            }
        }
        let crossings: Vec<Crossing> = surviving
            .iter()
            .map(|x| Crossing {
                sign: x.sign,
                edges: [
                    uf.find(x.edges[0]),
                    uf.find(x.edges[1]),
                    uf.find(x.edges[2]),
                    uf.find(x.edges[3]),
                ],
            })
            .collect();
        // kept strand components that lost all their crossings become loops
        let mut with_crossings: BTreeSet<usize> = BTreeSet::new();
        for x in &surviving {
            with_crossings.insert(self.edge_component[&x.edges[0]]);
            with_crossings.insert(self.edge_component[&x.edges[1]]);
        }
        let mut loops = 0;
        for &c in &sel.kept_components {
            if c >= self.n_strand_components {
                loops += 1; // kept free loop
            } else if !with_crossings.contains(&c) {
                loops += 1; // strand component smoothed to a crossingless circle
            }
        }
        Diagram::new(crossings, loops)
    }

    /// Relabel edges canonically: components ordered by their minimal current
    /// label, edges numbered consecutively along the orientation.
    pub fn canonicalize(&self) -> Diagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        // occurrence table: edge -> (crossing, slot) pairs
        let mut occ: BTreeMap<EdgeId, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for (slot, &e) in x.edges.iter().enumerate() {
                occ.entry(e).or_default().push((ci, slot));
            }
        }
        let mut relabel: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        let mut next: EdgeId = 1;
        let mut comps: Vec<usize> = (0..self.n_strand_components).collect();
        comps.sort_by_key(|&c| {
            self.edge_component
                .iter()
                .filter(|&(_, &cc)| cc == c)
                .map(|(&e, _)| e)
                .min()
                .unwrap()
        });
        for c in comps {
            let start = self
                .edge_component
                .iter()
                .filter(|&(_, &cc)| cc == c)
                .map(|(&e, _)| e)
                .min()
                .unwrap();
            let mut e = start;
            loop {
                relabel.insert(e, next);
                next += 1;
                // the head occurrence: the slot where e points into the crossing
                let (ci, slot) = *occ[&e]
                    .iter()
                    .find(|&&(ci, slot)| self.crossings[ci].slot_incoming()[slot])
                    .expect("validated diagram has a head per edge");
                let out_slot = match (slot, self.crossings[ci].sign) {
                    (0, _) => 2,
                    (3, Sign::Pos) => 1,
                    (1, Sign::Neg) => 3,
                    _ => unreachable!("slot role table"),
                };
                e = self.crossings[ci].edges[out_slot];
                if e == start {
                    break;
                }
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                sign: x.sign,
                edges: [
                    relabel[&x.edges[0]],
                    relabel[&x.edges[1]],
                    relabel[&x.edges[2]],
                    relabel[&x.edges[3]],
                ],
            })
            .collect();
        Diagram::new(crossings, self.free_loops).expect("relabeling preserves validity")
    }

    /// Canonical PD text, e.g. `PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]; O(1)`.
    pub fn print_pd(&self) -> String {
        let d = self.canonicalize();
        let mut s = String::from("PD[");
        for (i, x) in d.crossings.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&format!(
                "X({},{},{},{})",
                x.edges[0], x.edges[1], x.edges[2], x.edges[3]
            ));
        }
        s.push(']');
        if d.free_loops > 0 {
            s.push_str(&format!("; O({})", d.free_loops));
        }
        s
    }
}

/// Circles of one smoothing of a diagram.
pub struct ResolvedState {
    pub n_circles: usize,
    /// circles coming from strands (free loops are appended after these)
    pub strand_circles: usize,
    pub circle_of: BTreeMap<EdgeId, usize>,
}

struct UnionFind {
    parent: BTreeMap<EdgeId, EdgeId>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind {
            parent: BTreeMap::new(),
        }
    }

    fn find(&mut self, e: EdgeId) -> EdgeId {
        let mut root = e;
        while let Some(&p) = self.parent.get(&root) {
            if p == root {
                break;
            }
            root = p;
        }
        let mut cur = e;
        while let Some(&p) = self.parent.get(&cur) {
            if p == cur {
                break;
            }
            self.parent.insert(cur, root);
            cur = p;
        }
        root
    }

    fn union(&mut self, a: EdgeId, b: EdgeId) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
        self.parent.entry(a).or_insert(a);
        self.parent.entry(b).or_insert(b);
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

/// Parse either PD notation or braid notation, by prefix.
pub fn parse(text: &str) -> Result<Diagram, DiagError> {
    let t = text.trim();
    if t.starts_with("BR[") {
        parse_braid(t)
    } else {
        parse_pd(t)
    }
}

/// Parse `PD[X(a,b,c,d), ...]` with an optional `; O(n)` loop token.
/// Orientations are recovered by propagating the incoming-under convention;
/// components that never pass under follow the consecutive-label convention.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagError> {
    let t = text.trim();
    let (pd_part, loops) = match t.split_once(';') {
        Some((pd, rest)) => (pd.trim(), parse_loop_token(rest.trim())?),
        None => (t, 0),
    };
    let inner = pd_part
        .strip_prefix("PD[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| DiagError::Parse("expected PD[...]".to_string()))?;
    let mut quads: Vec<[EdgeId; 4]> = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("X(")
            .ok_or_else(|| DiagError::Parse(format!("expected X(...) at `{}`", rest)))?;
        let close = body
            .find(')')
            .ok_or_else(|| DiagError::Parse("unclosed X(".to_string()))?;
        let nums: Vec<&str> = body[..close].split(',').map(|s| s.trim()).collect();
        if nums.len() != 4 {
            return Err(DiagError::Parse(format!(
                "X(...) needs 4 labels, got {}",
                nums.len()
            )));
        }
        let mut quad = [0u32; 4];
        for (i, n) in nums.iter().enumerate() {
            quad[i] = n
                .parse::<u32>()
                .map_err(|_| DiagError::Parse(format!("bad edge label `{}`", n)))?;
        }
        quads.push(quad);
        rest = body[close + 1..].trim();
        rest = rest.strip_prefix(',').map(str::trim).unwrap_or(rest);
    }
    let signs = derive_signs(&quads)?;
    let crossings = quads
        .into_iter()
        .zip(signs)
        .map(|(edges, sign)| Crossing { sign, edges })
        .collect();
    Diagram::new(crossings, loops)
}

fn parse_loop_token(t: &str) -> Result<usize, DiagError> {
    t.strip_prefix("O(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse::<usize>().ok())
        .ok_or_else(|| DiagError::Parse(format!("expected O(n), got `{}`", t)))
}

/// Assign a sign to each quadruple from orientation constraints.
fn derive_signs(quads: &[[EdgeId; 4]]) -> Result<Vec<Sign>, DiagError> {
    // occurrence check
    let mut occ: BTreeMap<EdgeId, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, q) in quads.iter().enumerate() {
        for (slot, &e) in q.iter().enumerate() {
            occ.entry(e).or_default().push((ci, slot));
        }
    }
    for (&e, v) in &occ {
        if v.len() != 2 {
            return Err(DiagError::EdgeCount(e, v.len()));
        }
    }
    // role[edge] = Some(incoming at this crossing index?) resolved per occurrence.
    // Encode per (crossing, slot): Option<bool> incoming.
    let mut role: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut queue: Vec<((usize, usize), bool)> = Vec::new();
    for (ci, _) in quads.iter().enumerate() {
        queue.push(((ci, 0), true)); // incoming under
        queue.push(((ci, 2), false)); // outgoing under
    }
    while let Some(((ci, slot), incoming)) = queue.pop() {
        if let Some(&prev) = role.get(&(ci, slot)) {
            if prev != incoming {
                return Err(DiagError::InconsistentOrientation(format!(
                    "crossing {} slot {}",
                    ci, slot
                )));
            }
            continue;
        }
        role.insert((ci, slot), incoming);
        // an edge is incoming at exactly one endpoint
        let e = quads[ci][slot];
        for &(cj, sj) in &occ[&e] {
            if (cj, sj) != (ci, slot) {
                queue.push(((cj, sj), !incoming));
            }
        }
        // over-strand slots 1 and 3 carry complementary roles
        if slot == 1 || slot == 3 {
            queue.push(((ci, 4 - slot), !incoming));
        }
    }
    // components (orientation-free) for the successor fallback
    let mut uf = UnionFind::new();
    for q in quads {
        uf.union(q[0], q[2]);
        uf.union(q[1], q[3]);
    }
    let mut comp_edges: BTreeMap<EdgeId, BTreeSet<EdgeId>> = BTreeMap::new();
    for &e in occ.keys() {
        let r = uf.find(e);
        comp_edges.entry(r).or_default().insert(e);
    }
    let mut signs = Vec::with_capacity(quads.len());
    for (ci, q) in quads.iter().enumerate() {
        let sign = match role.get(&(ci, 3)) {
            Some(true) => Sign::Pos,
            Some(false) => Sign::Neg,
            None => {
                // never-under component: consecutive-label convention
                let (b, d) = (q[1], q[3]);
                let edges = &comp_edges[&uf.find(b)];
                let next = |x: EdgeId| -> EdgeId {
                    edges
                        .iter()
                        .copied()
                        .find(|&y| y > x)
                        .unwrap_or_else(|| *edges.iter().next().unwrap())
                };
                if next(d) == b {
                    Sign::Pos // over d -> b
                } else if next(b) == d {
                    Sign::Neg
                } else {
                    return Err(DiagError::InconsistentOrientation(format!(
                        "cannot orient over-strand at crossing {}",
                        ci
                    )));
                }
            }
        };
        signs.push(sign);
    }
    Ok(signs)
}

/// Parse `BR[width; s1 s2 ...]` and close the braid. Positive letter `i` is
/// the generator crossing strand `i` over strand `i+1`.
pub fn parse_braid(text: &str) -> Result<Diagram, DiagError> {
    let t = text.trim();
    let inner = t
        .strip_prefix("BR[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| DiagError::Parse("expected BR[...]".to_string()))?;
    let (w, word_text) = inner
        .split_once(';')
        .ok_or_else(|| DiagError::Parse("expected BR[width; word]".to_string()))?;
    let width: usize = w
        .trim()
        .parse()
        .map_err(|_| DiagError::Parse(format!("bad width `{}`", w.trim())))?;
    let mut word = Vec::new();
    for tok in word_text.split_whitespace() {
        let v: i32 = tok
            .parse()
            .map_err(|_| DiagError::Parse(format!("bad braid letter `{}`", tok)))?;
        if v == 0 || v.unsigned_abs() as usize >= width {
            return Err(DiagError::Parse(format!("braid letter {} out of range", v)));
        }
        word.push(v);
    }
    from_braid(width, &word)
}

/// Closure of a braid word on `width` strands.
pub fn from_braid(width: usize, word: &[i32]) -> Result<Diagram, DiagError> {
    if width == 0 {
        return Err(DiagError::Parse("braid width must be positive".to_string()));
    }
    for &v in word {
        if v == 0 || v.unsigned_abs() as usize >= width {
            return Err(DiagError::Parse(format!("braid letter {} out of range", v)));
        }
    }
    let mut next_id: EdgeId = 1;
    let mut fresh = || {
        let id = next_id;
        next_id += 1;
        id
    };
    let mut cur: Vec<EdgeId> = (0..width).map(|_| fresh()).collect();
    let first = cur.clone();
    let mut crossings: Vec<(Sign, [EdgeId; 4])> = Vec::new();
    for &letter in word {
        let i = letter.unsigned_abs() as usize - 1;
        let (lo, hi) = (cur[i], cur[i + 1]);
        let (nlo, nhi) = (fresh(), fresh());
        if letter > 0 {
            crossings.push((Sign::Pos, [hi, nhi, nlo, lo]));
        } else {
            crossings.push((Sign::Neg, [lo, hi, nhi, nlo]));
        }
        cur[i] = nlo;
        cur[i + 1] = nhi;
    }
    // closure: identify the top edges with the bottom edges
    let mut uf = UnionFind::new();
    for (&top, &bot) in cur.iter().zip(first.iter()) {
        uf.union(top, bot);
    }
    let used: BTreeSet<EdgeId> = crossings
        .iter()
        .flat_map(|(_, q)| q.iter().copied())
        .collect();
    let crossings: Vec<Crossing> = crossings
        .iter()
        .map(|&(sign, q)| Crossing {
            sign,
            edges: [uf.find(q[0]), uf.find(q[1]), uf.find(q[2]), uf.find(q[3])],
        })
        .collect();
    // strands that never enter a crossing close into free loops
    let loops = cur
        .iter()
        .zip(first.iter())
        .filter(|&(&t, &b)| t == b && !used.contains(&t))
        .count();
    Diagram::new(crossings, loops)
}

// ---------------------------------------------------------------------------
// cables of the unknot
// ---------------------------------------------------------------------------

/// The link `L^f_{n,m}`: an `f`-framed unknot cabled by `n` parallel strands
/// and `m` reversed ones. Drawn with `f` curl regions of `(n+m)^2` crossings
/// each, so the crossing count is `f(n+m)^2` and the writhe is `f(n-m)^2`.
pub fn cable_unknot(f: u32, n: usize, m: usize) -> Result<Diagram, DiagError> {
    let k = n + m;
    if k == 0 {
        return Err(DiagError::Parse("cable needs at least one strand".to_string()));
    }
    if f == 0 {
        return Ok(Diagram::unlink(k));
    }
    let f = f as usize;
    // canonical segment keys per grid g and strand s (1-based):
    //   col(g, s, y), y in 0..k : column segment below row y+1
    //   row(g, s, x), x in 1..k : row segment right of column x
    //   loop(g, s)              : column exit = row entry, around the curl
    // the row exit wraps to col(g+1 mod f, s, 0).
    let col = |g: usize, s: usize, y: usize| -> u64 { ((g * k + (s - 1)) * k + y) as u64 };
    let nloop = (f * k * k) as u64;
    let lp = |g: usize, s: usize| -> u64 { nloop + (g * k + (s - 1)) as u64 };
    let rw = |g: usize, s: usize, x: usize| -> u64 {
        nloop + (f * k) as u64 + ((g * k + (s - 1)) * (k - 1) + (x - 1)) as u64
    };
    let edge = |key: u64| -> EdgeId { (key + 1) as EdgeId };

    let mut crossings = Vec::with_capacity(f * k * k);
    for g in 0..f {
        for i in 1..=k {
            // over row i carries strand k+1-i
            let so = k + 1 - i;
            for j in 1..=k {
                let su = j;
                let south = edge(col(g, su, i - 1));
                let north = if i == k {
                    edge(lp(g, su))
                } else {
                    edge(col(g, su, i))
                };
                let west = if j == 1 { edge(lp(g, so)) } else { edge(rw(g, so, j - 1)) };
                let east = if j == k {
                    edge(col((g + 1) % f, so, 0))
                } else {
                    edge(rw(g, so, j))
                };
                let u_forward = su <= n;
                let o_forward = so <= n;
                let sign = if u_forward == o_forward { Sign::Pos } else { Sign::Neg };
                let edges = if u_forward {
                    // incoming under from the south; CCW: S, E, N, W
                    [south, east, north, west]
                } else {
                    // incoming under from the north; CCW: N, W, S, E
                    [north, west, south, east]
                };
                crossings.push(Crossing { sign, edges });
            }
        }
    }
    Diagram::new(crossings, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil_right() -> Diagram {
        from_braid(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn empty_and_loops() {
        let d = parse("PD[]; O(1)").unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.n_components(), 1);
        let (k, chi) = d.seifert_data();
        assert_eq!((k, chi), (1, 1));
    }

    #[test]
    fn hopf_from_pd() {
        let d = parse_pd("PD[X(1,3,2,4), X(3,1,4,2)]").unwrap();
        assert_eq!(d.n_crossings(), 2);
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.n_components(), 2);
        let (k, chi) = d.seifert_data();
        assert_eq!((k, chi), (2, 0));
    }

    #[test]
    fn trefoil_braid() {
        let d = trefoil_right();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.n_components(), 1);
        let (k, chi) = d.seifert_data();
        assert_eq!((k, chi), (2, -1));
        let m = d.mirror();
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.n_components(), 1);
    }

    #[test]
    fn atlas_trefoil_is_left_handed() {
        let d = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]").unwrap();
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.n_components(), 1);
    }

    #[test]
    fn print_parse_round_trip() {
        for d in [
            trefoil_right(),
            from_braid(3, &[1, -2, 1, -2]).unwrap(),
            parse_pd("PD[X(1,3,2,4), X(3,1,4,2)]").unwrap(),
            cable_unknot(1, 2, 1).unwrap(),
        ] {
            let text = d.print_pd();
            let back = parse(&text).unwrap();
            assert_eq!(back, d.canonicalize(), "round trip failed for {}", text);
            assert_eq!(back.print_pd(), text);
        }
    }

    #[test]
    fn sublink_of_hopf() {
        let d = parse_pd("PD[X(1,3,2,4), X(3,1,4,2)]").unwrap();
        let sel = SublinkSelector {
            kept_components: [0].into_iter().collect(),
        };
        let sub = d.sublink(&sel).unwrap();
        assert_eq!(sub.n_crossings(), 0);
        assert_eq!(sub.n_components(), 1);
        assert_eq!(sub.writhe(), 0);
        // keep everything: identity
        let all = SublinkSelector {
            kept_components: [0, 1].into_iter().collect(),
        };
        assert_eq!(d.sublink(&all).unwrap(), d);
    }

    #[test]
    fn sublink_of_split_union() {
        let d = trefoil_right().disjoint_union(&Diagram::unknot());
        assert_eq!(d.n_components(), 2);
        let keep_tref = SublinkSelector {
            kept_components: [0].into_iter().collect(),
        };
        let sub = d.sublink(&keep_tref).unwrap();
        assert_eq!(sub.writhe(), 3);
        assert_eq!(sub.n_components(), 1);
    }

    #[test]
    fn cable_counts() {
        let kink = cable_unknot(1, 1, 0).unwrap();
        assert_eq!(kink.n_crossings(), 1);
        assert_eq!(kink.writhe(), 1);
        assert_eq!(kink.n_components(), 1);

        let two = cable_unknot(1, 2, 0).unwrap();
        assert_eq!(two.n_crossings(), 4);
        assert_eq!(two.writhe(), 4);
        assert_eq!(two.n_components(), 2);

        let balanced = cable_unknot(1, 1, 1).unwrap();
        assert_eq!(balanced.n_crossings(), 4);
        assert_eq!(balanced.writhe(), 0);

        let l21 = cable_unknot(1, 2, 1).unwrap();
        assert_eq!(l21.n_crossings(), 9);
        assert_eq!(l21.writhe(), 1);
        assert_eq!(l21.n_components(), 3);

        let f2 = cable_unknot(2, 2, 0).unwrap();
        assert_eq!(f2.n_crossings(), 8);
        assert_eq!(f2.writhe(), 8);
        assert_eq!(f2.n_components(), 2);

        assert_eq!(cable_unknot(0, 3, 0).unwrap().n_components(), 3);
    }

    #[test]
    fn cable_self_writhe_splits() {
        // each component of the 2-cable carries one positive kink
        let two = cable_unknot(1, 2, 0).unwrap();
        assert_eq!(two.self_writhe(0), 1);
        assert_eq!(two.self_writhe(1), 1);
    }

    #[test]
    fn bad_pd_rejected() {
        assert!(parse_pd("PD[X(1,2,3)]").is_err());
        assert!(parse_pd("PD[X(1,3,2,4)]").is_err()); // labels appear once
        assert!(parse_pd("garbage").is_err());
    }
}
