//! Knot determinant from the front read as an ordinary knot diagram, built
//! straight from the event list.

use legch::front::{Event, FrontDiagram};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

/// Absolute value of any first minor of the coloring matrix.
pub fn knot_determinant(front: &FrontDiagram) -> u64 {
    let mut parent: Vec<usize> = Vec::new();
    let fresh = |parent: &mut Vec<usize>| {
        parent.push(parent.len());
        parent.len() - 1
    };
    // segment currently occupying each position, top to bottom
    let mut strands: Vec<usize> = Vec::new();
    // (over, under_in, under_out)
    let mut crossings: Vec<(usize, usize, usize)> = Vec::new();
    for ev in front.events() {
        match *ev {
            Event::LeftCusp(p) => {
                let s = fresh(&mut parent);
                strands.insert(p - 1, s);
                strands.insert(p - 1, s);
            }
            Event::Crossing(p) => {
                let (top, bottom) = (strands[p - 1], strands[p]);
                let under_out = fresh(&mut parent);
                crossings.push((top, bottom, under_out));
                strands[p - 1] = under_out;
                strands[p] = top;
            }
        }
    }
    for pair in strands.chunks(2) {
        union(&mut parent, pair[0], pair[1]);
    }
    let n = crossings.len();
    if n == 0 {
        return 1;
    }
    let mut ids: Vec<usize> = (0..parent.len()).map(|s| find(&mut parent, s)).collect();
    ids.sort();
    ids.dedup();
    let col = |parent: &mut Vec<usize>, s: usize| ids.binary_search(&find(parent, s)).unwrap();
    let mut m = vec![vec![0i128; ids.len()]; n];
    for (i, &(o, a, b)) in crossings.iter().enumerate() {
        m[i][col(&mut parent, o)] += 2;
        m[i][col(&mut parent, a)] -= 1;
        m[i][col(&mut parent, b)] -= 1;
    }
    let minor: Vec<Vec<i128>> = m[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss(minor).unsigned_abs() as u64
}

fn bareiss(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 || a[0].len() != n {
        return 0;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
