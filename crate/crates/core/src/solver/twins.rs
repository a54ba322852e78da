use crate::distance::DistanceMatrix;

/// Classes of mutually twin vertices (`d(x, w) = d(y, w)` for every
/// `w ∉ {x, y}`), each sorted ascending. Singleton classes are omitted.
pub fn twin_classes(d: &DistanceMatrix) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut class = vec![x];
        for (y, done) in assigned.iter_mut().enumerate().skip(x + 1) {
            if !*done && are_twins(d, x, y) {
                *done = true;
                class.push(y);
            }
        }
        if class.len() > 1 {
            classes.push(class);
        }
    }
    classes
}

fn are_twins(d: &DistanceMatrix, x: usize, y: usize) -> bool {
    let (rx, ry) = (d.row(x), d.row(y));
    (0..d.n()).all(|w| w == x || w == y || rx[w] == ry[w])
}

/// Vertices every resolving set can be assumed to contain: all but the
/// highest id of each twin class. Swapping twins is an automorphism, so
/// the lexicographically least minimum resolving set contains these.
pub fn forced_by_twins(d: &DistanceMatrix) -> Vec<usize> {
    let mut forced: Vec<usize> = twin_classes(d)
        .into_iter()
        .flat_map(|mut c| {
            c.pop();
            c
        })
        .collect();
    forced.sort_unstable();
    forced
}
