//! Diagram-level constructions: connected sum, the tangle replacement on
//! special fronts, the `K_n` family, twist knots and realization of a
//! prescribed reduced polynomial.

use crate::augmentation::Augmentation;
use crate::error::{Error, Result};
use crate::front::{Event, FrontDiagram, Gen};
use crate::poly::LaurentPoly;

/// A front whose upper right corner is ready for tangle replacement.
///
/// `e` is the last crossing at position 2. After it nothing touches the top
/// three strands, so the top two strands close off in the right cusp `s`
/// and the strand leaving `e` downward is the upper strand of `t`. The
/// trivial tangle sits on the top two strands just left of `e`, and `d` is
/// the Maslov potential difference between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialForm {
    pub front: FrontDiagram,
    pub e: Gen,
    pub e_event: usize,
    pub s: Gen,
    pub t: Gen,
    pub d: i32,
}

impl SpecialForm {
    pub fn detect(front: &FrontDiagram) -> Result<Self> {
        let events = front.events();
        let Some(e_event) = events.iter().rposition(|ev| *ev == Event::Crossing(2)) else {
            return Err(Error::NotSpecialForm("no crossing at position 2".into()));
        };
        for (i, ev) in events.iter().enumerate().skip(e_event + 1) {
            let clash = match *ev {
                Event::Crossing(p) => p <= 3,
                Event::LeftCusp(p) => p <= 4,
            };
            if clash {
                return Err(Error::NotSpecialForm(format!("event {i} disturbs the upper right corner")));
            }
        }
        let alphabet = front.grading()?;
        let arcs = front.arcs_before(e_event);
        let d = alphabet.mu[arcs[0]] - alphabet.mu[arcs[1]];
        let e_index = events[..e_event].iter().filter(|ev| matches!(ev, Event::Crossing(_))).count();
        Ok(SpecialForm {
            front: front.clone(),
            e: alphabet.crossing(e_index),
            e_event,
            s: alphabet.right_cusp(0),
            t: alphabet.right_cusp(1),
            d,
        })
    }

    /// Potential difference across the trivial tangle.
    pub fn maslov_number(&self) -> i32 {
        self.d
    }
}

/// Result of one tangle replacement, with the bookkeeping needed to carry
/// generators of the old front into the new one.
#[derive(Debug, Clone)]
pub struct TauResult {
    pub special: SpecialForm,
    old_crossings: usize,
    e_index: usize,
    /// New crossings `a, b, p, q, c` in diagram order.
    pub a: Gen,
    pub b: Gen,
    pub p: Gen,
    pub q: Gen,
    pub c: Gen,
    /// New top right cusp.
    pub r: Gen,
}

impl TauResult {
    pub fn front(&self) -> &FrontDiagram {
        &self.special.front
    }

    /// Identity of an old generator in the new front.
    pub fn map(&self, g: Gen) -> Gen {
        let i = g.index();
        let j = if i < self.e_index {
            i
        } else if i < self.old_crossings {
            i + 5
        } else {
            // right cusps move past the five new crossings and the new top cusp
            i + 6
        };
        Gen(j as u32)
    }

    pub fn map_augmentation(&self, eps: &Augmentation) -> Augmentation {
        eps.map(|g| self.map(g))
    }

    /// The new level triple `abc`.
    pub fn triple(&self) -> [Gen; 3] {
        [self.a, self.b, self.c]
    }
}

/// Replaces the trivial tangle of a special front by the five-crossing
/// tangle: a new left cusp on top, two crossings with the old top strand,
/// two crossings across the tangle's strands, and one more crossing with
/// the old top strand, all just before `e`.
pub fn tau(special: &SpecialForm) -> Result<TauResult> {
    let events = special.front.events();
    let ie = special.e_event;
    let mut out: Vec<Event> = events[..ie].to_vec();
    out.extend([Event::LeftCusp(1), Event::Crossing(2), Event::Crossing(2), Event::Crossing(3), Event::Crossing(3), Event::Crossing(2)]);
    out.extend(events[ie..].iter().map(|ev| match *ev {
        Event::LeftCusp(p) => Event::LeftCusp(p + 2),
        Event::Crossing(p) => Event::Crossing(p + 2),
    }));
    let front = FrontDiagram::new(out)?;
    let next = SpecialForm::detect(&front)?;
    let e_index = special.e.index();
    let g = |k: usize| Gen((e_index + k) as u32);
    Ok(TauResult {
        old_crossings: special.front.crossing_count(),
        e_index,
        a: g(0),
        b: g(1),
        p: g(2),
        q: g(3),
        c: g(4),
        r: Gen((special.front.crossing_count() + 5) as u32),
        special: next,
    })
}

/// `n`-fold tangle replacement.
pub fn tau_iterate(special: &SpecialForm, n: usize) -> Result<SpecialForm> {
    let mut cur = special.clone();
    for _ in 0..n {
        cur = tau(&cur)?.special;
    }
    Ok(cur)
}

/// Stacks `g` below `f` and joins `f`'s bottom right cusp to `g`'s top right
/// cusp with one new crossing, which has degree 0.
pub fn connected_sum(f: &FrontDiagram, g: &FrontDiagram) -> FrontDiagram {
    let shift = f.strand_count();
    let mut events = f.events().to_vec();
    events.extend(g.events().iter().map(|ev| match *ev {
        Event::LeftCusp(p) => Event::LeftCusp(p + shift),
        Event::Crossing(p) => Event::Crossing(p + shift),
    }));
    events.push(Event::Crossing(shift));
    FrontDiagram::new(events).expect("connected sum of knots is a knot")
}

/// Connected sum of `n >= 1` copies.
pub fn connected_power(f: &FrontDiagram, n: usize) -> Result<FrontDiagram> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one summand".into()));
    }
    let mut out = f.clone();
    for _ in 1..n {
        out = connected_sum(&out, f);
    }
    Ok(out)
}

/// Plat closure of `e_n^2 o_n^2 e_n` on `2n + 2` strands, with
/// `e_n = s_2 s_4 ... s_2n` and `o_n = s_3 s_5 ... s_(2n-1)`.
pub fn k_n(n: usize) -> Result<FrontDiagram> {
    if n < 1 {
        return Err(Error::InvalidArgument("K_n needs n >= 1".into()));
    }
    let even: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
    let odd: Vec<usize> = (1..n).map(|i| 2 * i + 1).collect();
    let word = [&even[..], &even[..], &odd[..], &odd[..], &even[..]].concat();
    Ok(FrontDiagram::plat(2 * n + 2, &word)?.with_name(format!("K{n}")))
}

/// Twist knot `T_d` with `d + 3` crossings: a stack of `d` left cusps below
/// a clasp, whose strands then cross down the stack one position at a time.
pub fn twist_knot(d: usize) -> Result<FrontDiagram> {
    if d < 1 {
        return Err(Error::InvalidArgument("twist knots need d >= 1".into()));
    }
    let mut events = vec![Event::LeftCusp(1), Event::LeftCusp(3), Event::Crossing(2)];
    events.extend(std::iter::repeat_n(Event::LeftCusp(3), d));
    events.extend([Event::Crossing(2), Event::Crossing(4), Event::Crossing(4)]);
    events.extend((3..=d + 1).map(|k| Event::Crossing(2 * k)));
    Ok(FrontDiagram::new(events)?.with_name(format!("twist_{d}")))
}

/// A front with unique reduced polynomial `p`: the connected sum of `a_d`
/// copies of the twist knot `T_d` for each term `a_d t^d`, with the right
/// handed trefoil standing in for `T_0`.
pub fn realize(p: &LaurentPoly) -> Result<FrontDiagram> {
    if p.terms().any(|(e, c)| e < 0 || c < 0) {
        return Err(Error::InvalidArgument(format!("{p} needs nonnegative exponents and coefficients")));
    }
    let mut summands = Vec::new();
    for (e, c) in p.terms() {
        let piece = if e == 0 { k_n(1)? } else { twist_knot(e as usize)? };
        summands.extend(std::iter::repeat_n(piece, c as usize));
    }
    let Some(first) = summands.first() else {
        return Ok(FrontDiagram::plat(2, &[])?.with_name("unknot"));
    };
    let mut out = first.clone();
    for s in &summands[1..] {
        out = connected_sum(&out, s);
    }
    Ok(out.with_name(format!("realize({p})")))
}

/// Family of augmentations of `tau^|w|(K)` obtained from `eps` by extending
/// amply (`a`) or sparsely (`s`) at each step.
#[derive(Debug, Clone)]
pub struct WordFamily {
    pub special: SpecialForm,
    pub augmentations: Vec<Augmentation>,
}

pub fn word_family(base: &SpecialForm, eps: &Augmentation, word: &str) -> Result<WordFamily> {
    let bad = |why: &str| Error::InvalidArgument(format!("word `{word}`: {why}"));
    if !word.starts_with('a') {
        return Err(bad("must begin with `a`"));
    }
    if word.chars().any(|ch| ch != 'a' && ch != 's') {
        return Err(bad("letters must be `a` or `s`"));
    }
    if word.contains("ss") {
        return Err(bad("`s` may not repeat"));
    }
    let mut cur = base.clone();
    let mut family = vec![eps.clone()];
    for letter in word.chars() {
        let step = tau(&cur)?;
        let [a, b, c] = step.triple();
        let choices: &[&[Gen]] = if letter == 'a' { &[&[a, b, c], &[a, b]] } else { &[&[a], &[b, c], &[c]] };
        family = family
            .iter()
            .flat_map(|m| {
                let base = step.map_augmentation(m);
                choices.iter().map(move |ch| base.union(&Augmentation::new(ch.iter().copied())))
            })
            .collect();
        cur = step.special;
    }
    Ok(WordFamily { special: cur, augmentations: family })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse_front;

    #[test]
    fn k_n_words() {
        assert_eq!(k_n(1).unwrap().events()[2..], *parse_front("plat 4 : 2 2 2").unwrap().events().get(2..).unwrap());
        assert_eq!(k_n(2).unwrap().events(), parse_front("plat 6 : 2 4 2 4 3 3 2 4").unwrap().events());
        assert!(k_n(0).is_err());
    }

    #[test]
    fn trefoil_is_special_with_maslov_one() {
        let sf = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
        assert_eq!(sf.maslov_number(), 1);
        assert_eq!(sf.e, Gen(2));
        assert_eq!(sf.s, Gen(3));
    }

    #[test]
    fn unknot_is_not_special() {
        let f = parse_front("plat 2 :").unwrap();
        assert!(matches!(SpecialForm::detect(&f), Err(Error::NotSpecialForm(_))));
        // crossing at position 1 after e
        let g = parse_front("front : L 1 L 3 X 2 X 1 X 1").unwrap();
        assert!(matches!(SpecialForm::detect(&g), Err(Error::NotSpecialForm(_))));
    }

    #[test]
    fn tau_adds_five_crossings_and_a_cusp() {
        let sf = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
        let t = tau(&sf).unwrap();
        assert_eq!(t.front().crossing_count(), 8);
        assert_eq!(t.front().left_cusp_count(), 3);
        assert_eq!(t.special.maslov_number(), 1);
        assert_eq!(t.special.e, t.c);
        // crossings before e keep their index; e and the cusps move
        assert_eq!(t.map(Gen(0)), Gen(0));
        assert_eq!(t.map(Gen(2)), Gen(7));
        assert_eq!(t.map(Gen(3)), Gen(9));
        assert_eq!(t.r, Gen(8));
    }

    #[test]
    fn word_validation() {
        let sf = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
        let eps = Augmentation::default();
        for w in ["", "s", "ass", "ab"] {
            assert!(word_family(&sf, &eps, w).is_err(), "{w}");
        }
        let fam = word_family(&sf, &eps, "as").unwrap();
        assert_eq!(fam.augmentations.len(), 6);
    }

    #[test]
    fn realize_rejects_negative_terms() {
        assert!(realize(&"t^-1".parse().unwrap()).is_err());
        assert!(realize(&"1 - t".parse().unwrap()).is_err());
        assert_eq!(realize(&LaurentPoly::zero()).unwrap().crossing_count(), 0);
    }
}
