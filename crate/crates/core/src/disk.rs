//! Admissible disks of a simple front and the differential they define.
//!
//! In a simple front every admissible disk is x-monotone: each vertical
//! slice is an interval between an upper and a lower boundary strand. The
//! sweep below starts a partial disk inside every left cusp and pushes it
//! through the remaining events. At each crossing a partial disk either
//! passes the crossing, turns a convex corner on its upper or lower
//! boundary, or closes with the crossing as its right-most corner. Partial
//! disks still open after the last event close exactly when they fill a
//! single right cusp.

use crate::algebra::{Differential, Word, Z2Sum};
use crate::error::{Error, Result};
use crate::front::{Event, FrontDiagram, Gen, GradedAlphabet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    /// The right-most corner.
    pub target: Gen,
    /// Negative corners read counterclockwise from the target.
    pub corners: Word,
    /// Index of the left cusp at the left-most point.
    pub left_cusp: usize,
    /// First event index covered by the disk.
    pub start_event: usize,
    /// Boundary positions `(upper, lower)` after each covered event; the
    /// disk's regions are the gaps strictly between them.
    pub slices: Vec<(usize, usize)>,
}

#[derive(Clone)]
struct Partial {
    upper: usize,
    lower: usize,
    upper_corners: Vec<Gen>,
    lower_corners: Vec<Gen>,
    slices: Vec<(usize, usize)>,
}

impl Partial {
    fn finish(self, target: Gen, left_cusp: usize, start_event: usize) -> Disk {
        // Counterclockwise from the right-most point: the upper boundary
        // right to left, then the lower boundary left to right.
        let mut corners: Vec<Gen> = self.upper_corners.into_iter().rev().collect();
        corners.extend(self.lower_corners);
        Disk { target, corners: Word(corners), left_cusp, start_event, slices: self.slices }
    }
}

/// Every admissible disk of the front, grouped by nothing; see
/// [`admissible_disks`] for a single target.
pub fn all_disks(front: &FrontDiagram, alphabet: &GradedAlphabet) -> Vec<Disk> {
    let events = front.events();
    // Crossing generator for each event index.
    let mut crossing_gen = vec![None; events.len()];
    let mut k = 0;
    for (i, ev) in events.iter().enumerate() {
        if let Event::Crossing(_) = ev {
            crossing_gen[i] = Some(alphabet.crossing(k));
            k += 1;
        }
    }

    let mut out = Vec::new();
    let mut cusp_index = 0;
    for (start, ev) in events.iter().enumerate() {
        if let Event::LeftCusp(pos) = *ev {
            let init =
                Partial { upper: pos, lower: pos + 1, upper_corners: Vec::new(), lower_corners: Vec::new(), slices: vec![(pos, pos + 1)] };
            sweep(events, &crossing_gen, alphabet, start + 1, init, cusp_index, start, &mut out);
            cusp_index += 1;
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    events: &[Event],
    crossing_gen: &[Option<Gen>],
    alphabet: &GradedAlphabet,
    mut i: usize,
    mut d: Partial,
    left_cusp: usize,
    start: usize,
    out: &mut Vec<Disk>,
) {
    while i < events.len() {
        match events[i] {
            Event::LeftCusp(q) => {
                if q <= d.upper {
                    d.upper += 2;
                    d.lower += 2;
                } else if q <= d.lower {
                    d.lower += 2;
                }
            }
            Event::Crossing(k) => {
                let g = crossing_gen[i].expect("crossing event");
                if k == d.upper && k + 1 == d.lower {
                    // The two boundaries meet: the crossing is the right-most corner.
                    out.push(d.finish(g, left_cusp, start));
                    return;
                } else if k + 1 == d.upper {
                    // A strand from above dips into the upper boundary. Either
                    // turn a corner onto it, or follow the boundary strand up.
                    let mut turned = d.clone();
                    turned.upper_corners.push(g);
                    turned.slices.push((turned.upper, turned.lower));
                    sweep(events, crossing_gen, alphabet, i + 1, turned, left_cusp, start, out);
                    d.upper -= 1;
                } else if k == d.lower {
                    let mut turned = d.clone();
                    turned.lower_corners.push(g);
                    turned.slices.push((turned.upper, turned.lower));
                    sweep(events, crossing_gen, alphabet, i + 1, turned, left_cusp, start, out);
                    d.lower += 1;
                } else if k == d.upper {
                    // Boundary strand dives into the disk; turning would be concave.
                    d.upper += 1;
                } else if k + 1 == d.lower {
                    d.lower -= 1;
                }
            }
        }
        d.slices.push((d.upper, d.lower));
        i += 1;
    }
    // Closed off by right cusps (1,2), (3,4), ...
    if d.lower == d.upper + 1 && d.upper % 2 == 1 {
        let cusp = alphabet.right_cusp((d.upper - 1) / 2);
        out.push(d.finish(cusp, left_cusp, start));
    }
}

/// Admissible disks with right-most corner at `target`.
pub fn admissible_disks(front: &FrontDiagram, alphabet: &GradedAlphabet, target: Gen) -> Vec<Disk> {
    all_disks(front, alphabet).into_iter().filter(|d| d.target == target).collect()
}

/// Sum of the corner words of the given disks for each generator, plus `1`
/// on every right cusp.
pub fn differential_from_disks(alphabet: &GradedAlphabet, disks: &[Disk]) -> Differential {
    let mut terms = vec![Z2Sum::zero(); alphabet.len()];
    for g in alphabet.right_cusps() {
        terms[g.index()].toggle(Word::one());
    }
    for d in disks {
        terms[d.target.index()].toggle(d.corners.clone());
    }
    Differential::from_terms(terms)
}

/// The differential of the front, checking that every word drops degree by
/// one.
pub fn differential(front: &FrontDiagram, alphabet: &GradedAlphabet) -> Result<Differential> {
    let disks = all_disks(front, alphabet);
    for d in &disks {
        let expected = alphabet.degree(d.target) - 1;
        let got = d.corners.degree(alphabet);
        if got != expected {
            return Err(Error::InternalInconsistency(format!(
                "disk for {} with corners {} has degree {got}, expected {expected}",
                alphabet.name(d.target),
                d.corners.display(alphabet),
            )));
        }
    }
    Ok(differential_from_disks(alphabet, &disks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse_front;

    fn setup(text: &str) -> (FrontDiagram, GradedAlphabet) {
        let f = parse_front(text).unwrap();
        let a = f.grading().unwrap();
        (f, a)
    }

    fn words(a: &GradedAlphabet, disks: &[Disk]) -> Vec<String> {
        let mut v: Vec<String> = disks.iter().map(|d| d.corners.display(a).to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn trefoil_top_cusp_disks() {
        let (f, a) = setup("plat 4 : 2 2 2");
        let r = a.lookup("r1").unwrap();
        assert_eq!(words(&a, &admissible_disks(&f, &a, r)), ["x1", "x1*x2*x3", "x3"]);
        let s = a.lookup("r2").unwrap();
        assert_eq!(words(&a, &admissible_disks(&f, &a, s)), ["x1", "x3", "x3*x2*x1"]);
        for c in a.crossings() {
            assert!(admissible_disks(&f, &a, c).is_empty());
        }
    }

    #[test]
    fn unknot_differential_cancels() {
        let (f, a) = setup("plat 2 :");
        let d = differential(&f, &a).unwrap();
        assert!(d.of(a.right_cusp(0)).is_zero());
        assert_eq!(all_disks(&f, &a).len(), 1);
    }

    #[test]
    fn k2_p_disks() {
        let (f, a) = setup("plat 6 : 2 4 2 4 3 3 2 4");
        let p = a.lookup("x5").unwrap();
        // a = x1, abar = x2, b = x3, bbar = x4
        assert_eq!(words(&a, &admissible_disks(&f, &a, p)), ["1", "x2*x4", "x3*x1", "x3*x1*x2*x4"]);
    }

    #[test]
    fn slices_track_the_disk() {
        let (f, a) = setup("plat 4 : 2 2 2");
        let disks = admissible_disks(&f, &a, a.lookup("r1").unwrap());
        for d in &disks {
            assert_eq!(d.slices.len(), f.events().len() - d.start_event);
            assert!(d.slices.iter().all(|&(u, l)| u < l));
        }
    }
}
