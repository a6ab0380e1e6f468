//! Simple Legendrian fronts in plat form.
//!
//! A front is an ordered list of events read left to right. A left cusp
//! inserts two new strands, a crossing swaps two adjacent strands, and after
//! the last event the strands are closed off pairwise by right cusps
//! `(1,2), (3,4), ...`, all at the same x-coordinate. Positions are 1-based
//! and counted from the top.
//!
//! Every strand between a left cusp and a right cusp is a spanning arc. Arc
//! `2k` is the upper arc leaving left cusp `k` and arc `2k + 1` the lower one.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    /// Two new strands appear at positions `pos` and `pos + 1`.
    LeftCusp(usize),
    /// The strands at positions `pos` and `pos + 1` cross.
    Crossing(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontDiagram {
    pub name: Option<String>,
    events: Vec<Event>,
}

/// A crossing of the front together with the arcs that meet there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingInfo {
    pub event: usize,
    pub pos: usize,
    /// Arc entering the crossing from the upper left; it has the smaller
    /// slope and is the over-strand.
    pub upper_arc: usize,
    pub lower_arc: usize,
}

/// Arc bookkeeping for a validated diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub crossings: Vec<CrossingInfo>,
    /// `(upper arc, lower arc)` of each right cusp, top to bottom.
    pub right_cusps: Vec<(usize, usize)>,
    pub left_cusps: usize,
    pub strands: usize,
}

impl Layout {
    pub fn arc_count(&self) -> usize {
        2 * self.left_cusps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub r: u32,
    pub writhe: i64,
    pub cusps: usize,
    pub up: usize,
    pub down: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gen(pub u32);

impl Gen {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Index into [`Layout::crossings`].
    Crossing(usize),
    /// Index of the right cusp, counted from the top.
    RightCusp(usize),
}

/// The generating set of the DGA with its grading.
///
/// Crossings come first in diagram order, followed by the right cusps from
/// top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlphabet {
    names: Vec<String>,
    kinds: Vec<GenKind>,
    degrees: Vec<i32>,
    /// Maslov potential of each arc, normalized to minimum 0.
    pub mu: Vec<i32>,
    crossing_count: usize,
}

impl GradedAlphabet {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.len() as u32).map(Gen)
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn kind(&self, g: Gen) -> GenKind {
        self.kinds[g.index()]
    }

    pub fn degree(&self, g: Gen) -> i32 {
        self.degrees[g.index()]
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_count
    }

    pub fn crossing(&self, i: usize) -> Gen {
        assert!(i < self.crossing_count);
        Gen(i as u32)
    }

    pub fn right_cusp(&self, j: usize) -> Gen {
        Gen((self.crossing_count + j) as u32)
    }

    pub fn crossings(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.crossing_count as u32).map(Gen)
    }

    pub fn right_cusps(&self) -> impl Iterator<Item = Gen> + '_ {
        (self.crossing_count as u32..self.len() as u32).map(Gen)
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| Gen(i as u32))
    }

    /// Generators of degree `k`, in generator order.
    pub fn of_degree(&self, k: i32) -> Vec<Gen> {
        self.gens().filter(|&g| self.degree(g) == k).collect()
    }

    /// Degree-0 crossings: the candidates for augmentation.
    pub fn degree0(&self) -> Vec<Gen> {
        self.of_degree(0)
    }

    pub fn n_k(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// `sum_k (-1)^k n_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees.iter().map(|&d| if d.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }
}

impl FrontDiagram {
    /// Builds a diagram from an event list, checking positions, parity of the
    /// terminal strand count and that the closure is a knot.
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let f = FrontDiagram { name: None, events };
        let layout = f.simulate()?;
        let comps = f.component_count(&layout);
        if comps != 1 {
            return Err(Error::MultiComponent(comps));
        }
        Ok(f)
    }

    /// Plat closure of a braid word on `strands` strands: all left cusps at
    /// the start, then the crossings `sigma_i` for `i` in `word`.
    pub fn plat(strands: usize, word: &[usize]) -> Result<Self> {
        if strands == 0 || strands % 2 == 1 {
            return Err(Error::OddStrandCount(strands));
        }
        let mut events: Vec<Event> = (0..strands / 2).map(|k| Event::LeftCusp(2 * k + 1)).collect();
        events.extend(word.iter().map(|&i| Event::Crossing(i)));
        Self::new(events)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Crossing(_))).count()
    }

    pub fn left_cusp_count(&self) -> usize {
        self.events.len() - self.crossing_count()
    }

    pub fn strand_count(&self) -> usize {
        2 * self.left_cusp_count()
    }

    fn simulate(&self) -> Result<Layout> {
        let mut strands: Vec<usize> = Vec::new();
        let mut crossings = Vec::new();
        let mut left_cusps = 0;
        for (index, ev) in self.events.iter().enumerate() {
            match *ev {
                Event::LeftCusp(pos) => {
                    if pos == 0 || pos > strands.len() + 1 {
                        return Err(Error::PositionOutOfRange { index, pos, strands: strands.len() });
                    }
                    strands.insert(pos - 1, 2 * left_cusps + 1);
                    strands.insert(pos - 1, 2 * left_cusps);
                    left_cusps += 1;
                }
                Event::Crossing(pos) => {
                    if pos == 0 || pos + 1 > strands.len() {
                        return Err(Error::PositionOutOfRange { index, pos, strands: strands.len() });
                    }
                    crossings.push(CrossingInfo { event: index, pos, upper_arc: strands[pos - 1], lower_arc: strands[pos] });
                    strands.swap(pos - 1, pos);
                }
            }
        }
        if strands.is_empty() || strands.len() % 2 == 1 {
            return Err(Error::OddStrandCount(strands.len()));
        }
        let right_cusps = strands.chunks(2).map(|p| (p[0], p[1])).collect();
        Ok(Layout { crossings, right_cusps, left_cusps, strands: strands.len() })
    }

    /// Arc at each position just before event `index`.
    pub fn arcs_before(&self, index: usize) -> Vec<usize> {
        let mut strands: Vec<usize> = Vec::new();
        let mut left_cusps = 0;
        for ev in &self.events[..index] {
            match *ev {
                Event::LeftCusp(pos) => {
                    strands.insert(pos - 1, 2 * left_cusps + 1);
                    strands.insert(pos - 1, 2 * left_cusps);
                    left_cusps += 1;
                }
                Event::Crossing(pos) => strands.swap(pos - 1, pos),
            }
        }
        strands
    }

    pub fn layout(&self) -> Layout {
        self.simulate().expect("validated at construction")
    }

    fn component_count(&self, layout: &Layout) -> usize {
        let n = layout.arc_count();
        let partner = right_partners(layout);
        let mut seen = vec![false; n];
        let mut comps = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut a = start;
            loop {
                seen[a] = true;
                let b = partner[a].0;
                seen[b] = true;
                a = b ^ 1;
                if a == start {
                    break;
                }
            }
        }
        comps
    }

    /// Walks the knot once, starting rightward along the upper arc of the
    /// first left cusp.
    fn traverse(&self, layout: &Layout) -> Traversal {
        let n = layout.arc_count();
        let partner = right_partners(layout);
        let mut rightward = vec![false; n];
        let mut mu = vec![0i64; n];
        let (mut up, mut down) = (0, 0);
        let mut a = 0;
        let mut level = 0i64;
        loop {
            rightward[a] = true;
            mu[a] = level;
            // Through the right cusp onto the partner arc.
            let (b, b_is_upper) = partner[a];
            if b_is_upper {
                up += 1;
                level += 1;
            } else {
                down += 1;
                level -= 1;
            }
            mu[b] = level;
            // Back through the left cusp.
            let c = b ^ 1;
            if c % 2 == 0 {
                up += 1;
                level += 1;
            } else {
                down += 1;
                level -= 1;
            }
            if c == 0 {
                break;
            }
            a = c;
        }
        Traversal { rightward, mu, up, down, closing_shift: level }
    }

    pub fn classical_invariants(&self) -> ClassicalInvariants {
        let layout = self.layout();
        let tr = self.traverse(&layout);
        let writhe: i64 =
            layout.crossings.iter().map(|c| if tr.rightward[c.upper_arc] == tr.rightward[c.lower_arc] { 1 } else { -1 }).sum();
        let cusps = 2 * layout.left_cusps;
        ClassicalInvariants {
            tb: writhe - (cusps / 2) as i64,
            r: (tr.up as i64 - tr.down as i64).unsigned_abs() as u32 / 2,
            writhe,
            cusps,
            up: tr.up,
            down: tr.down,
        }
    }

    /// Maslov potential and generator degrees. Fails with
    /// [`Error::RotationNonzero`] when no integer potential exists.
    pub fn grading(&self) -> Result<GradedAlphabet> {
        let layout = self.layout();
        let tr = self.traverse(&layout);
        if tr.closing_shift != 0 {
            return Err(Error::RotationNonzero((tr.closing_shift.unsigned_abs() / 2) as u32));
        }
        let min = tr.mu.iter().copied().min().unwrap_or(0);
        let mu: Vec<i32> = tr.mu.iter().map(|&m| (m - min) as i32).collect();

        let mut names = Vec::new();
        let mut kinds = Vec::new();
        let mut degrees = Vec::new();
        for (i, c) in layout.crossings.iter().enumerate() {
            names.push(format!("x{}", i + 1));
            kinds.push(GenKind::Crossing(i));
            degrees.push(mu[c.upper_arc] - mu[c.lower_arc]);
        }
        for j in 0..layout.right_cusps.len() {
            names.push(format!("r{}", j + 1));
            kinds.push(GenKind::RightCusp(j));
            degrees.push(1);
        }
        Ok(GradedAlphabet { names, kinds, degrees, mu, crossing_count: layout.crossings.len() })
    }

    /// Extended-form serialization; [`parse_front`] reads it back.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str("# name: ");
            out.push_str(name);
            out.push('\n');
        }
        out.push_str("front :");
        for ev in &self.events {
            match ev {
                Event::LeftCusp(p) => out.push_str(&format!(" L {p}")),
                Event::Crossing(p) => out.push_str(&format!(" X {p}")),
            }
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

struct Traversal {
    rightward: Vec<bool>,
    mu: Vec<i64>,
    up: usize,
    down: usize,
    closing_shift: i64,
}

/// For each arc, the arc it meets at its right cusp and whether that arc is
/// the cusp's upper one.
fn right_partners(layout: &Layout) -> Vec<(usize, bool)> {
    let mut partner = vec![(0, false); layout.arc_count()];
    for &(u, l) in &layout.right_cusps {
        partner[u] = (l, false);
        partner[l] = (u, true);
    }
    partner
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> (Vec<Token<'_>>, Option<String>) {
    let mut tokens = Vec::new();
    let mut name = None;
    for (ln, line) in text.lines().enumerate() {
        let (body, comment) = match line.find('#') {
            Some(i) => (&line[..i], Some(&line[i + 1..])),
            None => (line, None),
        };
        if let Some(c) = comment {
            if let Some(n) = c.trim().strip_prefix("name:") {
                name.get_or_insert_with(|| n.trim().to_string());
            }
        }
        let mut start = None;
        let bytes = body.as_bytes();
        for i in 0..=bytes.len() {
            let boundary = i == bytes.len() || bytes[i].is_ascii_whitespace() || bytes[i] == b':' || bytes[i] == b',';
            if boundary {
                if let Some(s) = start.take() {
                    tokens.push(Token { text: &body[s..i], line: ln + 1, column: s + 1 });
                }
                if i < bytes.len() && bytes[i] == b':' {
                    tokens.push(Token { text: ":", line: ln + 1, column: i + 1 });
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
    }
    (tokens, name)
}

fn syntax(tok: Option<&Token<'_>>, message: impl Into<String>) -> Error {
    let (line, column) = tok.map(|t| (t.line, t.column)).unwrap_or((0, 0));
    Error::Syntax { line, column, message: message.into() }
}

fn int_token(tok: Option<&Token<'_>>) -> Result<usize> {
    let t = tok.ok_or_else(|| syntax(None, "unexpected end of input, expected an integer"))?;
    t.text.parse::<usize>().map_err(|_| syntax(Some(t), format!("expected a nonnegative integer, found `{}`", t.text)))
}

/// Parses either `plat 2m : i1 i2 ...` or `front : L p X q ...`.
pub fn parse_front(text: &str) -> Result<FrontDiagram> {
    let (tokens, name) = tokenize(text);
    let mut it = tokens.iter().peekable();
    let head = it.next().ok_or_else(|| syntax(None, "empty input"))?;
    let events = match head.text {
        "plat" => {
            let strands = int_token(it.next())?;
            if strands == 0 || strands % 2 == 1 {
                return Err(Error::OddStrandCount(strands));
            }
            let colon = it.next();
            if colon.map(|t| t.text) != Some(":") {
                return Err(syntax(colon, "expected `:`"));
            }
            let mut events: Vec<Event> = (0..strands / 2).map(|k| Event::LeftCusp(2 * k + 1)).collect();
            for t in it {
                let pos = int_token(Some(t))?;
                if pos == 0 || pos >= strands {
                    return Err(Error::PositionOutOfRange { index: events.len(), pos, strands });
                }
                events.push(Event::Crossing(pos));
            }
            events
        }
        "front" => {
            let colon = it.next();
            if colon.map(|t| t.text) != Some(":") {
                return Err(syntax(colon, "expected `:`"));
            }
            let mut events = Vec::new();
            while let Some(t) = it.next() {
                let ctor: fn(usize) -> Event = match t.text {
                    "L" | "l" => Event::LeftCusp,
                    "X" | "x" => Event::Crossing,
                    other => return Err(syntax(Some(t), format!("expected `L` or `X`, found `{other}`"))),
                };
                events.push(ctor(int_token(it.next())?));
            }
            events
        }
        other => return Err(syntax(Some(head), format!("expected `plat` or `front`, found `{other}`"))),
    };
    let mut f = FrontDiagram::new(events)?;
    f.name = name;
    Ok(f)
}
