//! Brute-force reference checks, independent of the search in [`crate::detect`]:
//! every vertex subset of the right size is classified from its edge count,
//! degree multiset and connectivity.

use crate::detect::Pattern;
use crate::graph::Graph;

fn subsets(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(n, k, v + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut f)
}

// (edge count, sorted degrees, connected) of G[s], or of its complement
fn profile(g: &Graph, s: &[usize], co: bool) -> (usize, Vec<usize>, bool) {
    let k = s.len();
    let adj = |i: usize, j: usize| g.has_edge(s[i], s[j]) != co;
    let mut deg = vec![0; k];
    let mut edges = 0;
    for i in 0..k {
        for j in i + 1..k {
            if adj(i, j) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, s) in seen.iter_mut().enumerate() {
            if !*s && adj(i, j) {
                *s = true;
                stack.push(j);
            }
        }
    }
    deg.sort_unstable();
    (edges, deg, seen.iter().all(|&b| b))
}

/// Does the subset `s` induce `p`?
pub fn induces(g: &Graph, s: &[usize], p: Pattern) -> bool {
    if s.len() != p.order() {
        return false;
    }
    let (co, shape) = match p {
        Pattern::P4 => (false, 'p'),
        Pattern::P5 => (false, 'p'),
        Pattern::CoP5 => (true, 'p'),
        Pattern::C4 | Pattern::C5 => (false, 'c'),
        Pattern::CoC4 => (true, 'c'),
    };
    let (edges, deg, connected) = profile(g, s, co);
    let k = s.len();
    match shape {
        'p' => edges == k - 1 && connected && deg[..2] == [1, 1] && deg[2..].iter().all(|&d| d == 2),
        _ => edges == k && connected && deg.iter().all(|&d| d == 2),
    }
}

pub fn contains(g: &Graph, p: Pattern) -> bool {
    subsets(g.n(), p.order(), |s| induces(g, s, p))
}

pub fn is_free(g: &Graph, ps: &[Pattern]) -> bool {
    ps.iter().all(|&p| !contains(g, p))
}

/// Tries every clique/stable bipartition. Exponential; meant for n <= 12.
pub fn is_split(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|u| {
            (u + 1..n).all(|v| match (inside(u), inside(v)) {
                (true, true) => g.has_edge(u, v),
                (false, false) => !g.has_edge(u, v),
                _ => true,
            })
        })
    })
}

/// The labeled graph on `n` vertices whose edge `{i, j}` (i < j) is present
/// iff bit number `j(j-1)/2 + i` of `mask` is set (column order).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

// components of G[s] (or of its complement), by repeated flooding
fn parts(g: &Graph, s: &[usize], co: bool) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = s.to_vec();
    let mut out = Vec::new();
    while let Some(start) = left.pop() {
        let mut part = vec![start];
        let mut i = 0;
        while i < part.len() {
            let u = part[i];
            let (near, far): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&v| g.has_edge(u, v) != co);
            part.extend(near);
            left = far;
            i += 1;
        }
        part.sort_unstable();
        out.push(part);
    }
    out
}

fn complete(g: &Graph, v: usize, s: &[usize]) -> bool {
    s.iter().all(|&u| u == v || g.has_edge(u, v))
}

fn anticomplete(g: &Graph, v: usize, s: &[usize]) -> bool {
    s.iter().all(|&u| !g.has_edge(u, v))
}

fn mixed(g: &Graph, v: usize, s: &[usize]) -> bool {
    !complete(g, v, s) && !anticomplete(g, v, s)
}

/// Checks the structure partition conditions (i)-(ix) for
/// `X_0..X_m = xs` and `Y_0..Y_m = ys` directly from their statement.
pub fn structure_clauses(g: &Graph, xs: &[Vec<usize>], ys: &[Vec<usize>]) -> Result<(), String> {
    let m = xs.len().saturating_sub(1);
    if m < 2 || ys.len() != xs.len() {
        return Err(format!("need m >= 2 and as many Y_i as X_i, got {} and {}", xs.len(), ys.len()));
    }
    let mut all: Vec<usize> = xs.iter().chain(ys).flatten().copied().collect();
    all.sort_unstable();
    if all != (0..g.n()).collect::<Vec<_>>() {
        return Err("sets are not a partition of V(G)".into());
    }
    let x: Vec<usize> = xs.iter().flatten().copied().collect();
    let y: Vec<usize> = ys.iter().flatten().copied().collect();
    let x0 = &xs[0];
    let outside = |i: usize| -> Vec<usize> {
        xs[1..].iter().enumerate().filter(|(j, _)| j + 1 != i).flat_map(|(_, s)| s.clone()).collect()
    };

    // (i)
    for (i, xi) in xs.iter().enumerate().skip(1) {
        if xi.len() < 2 || parts(g, xi, false).len() != 1 {
            return Err(format!("(i): X_{i} is not big and connected"));
        }
    }
    if x0.iter().any(|&v| !anticomplete(g, v, x0)) {
        return Err("(i): X_0 is not stable".into());
    }
    for i in 0..=m {
        for j in i + 1..=m {
            if xs[i].iter().any(|&v| !anticomplete(g, v, &xs[j])) {
                return Err(format!("(i): X_{i} and X_{j} are not anticomplete"));
            }
        }
    }
    // (ii)
    for i in 1..=m {
        if ys[i].is_empty() {
            return Err(format!("(ii): Y_{i} is empty"));
        }
        for &v in &ys[i] {
            if !mixed(g, v, &xs[i]) || !complete(g, v, &outside(i)) {
                return Err(format!("(ii): vertex {v} of Y_{i}"));
            }
        }
    }
    if ys[0].iter().any(|&v| !complete(g, v, &outside(0))) {
        return Err("(ii): Y_0 is not complete to X \\ X_0".into());
    }
    // (iii)
    for i in 0..=m {
        for j in i + 1..=m {
            if ys[i].iter().any(|&v| !complete(g, v, &ys[j])) {
                return Err(format!("(iii): Y_{i} and Y_{j} are not complete"));
            }
        }
    }
    let anti = parts(g, &y, true);
    // (iv)
    for &v in x.iter().filter(|v| !x0.contains(v)) {
        if anti.iter().any(|z| mixed(g, v, z)) {
            return Err(format!("(iv): vertex {v} is mixed on an anticomponent of Y"));
        }
    }
    // (v)
    for (i, xi) in xs.iter().enumerate().skip(1) {
        if !xi.iter().any(|&v| complete(g, v, &y)) {
            return Err(format!("(v): no vertex of X_{i} is complete to Y"));
        }
    }
    // (vi)
    for &v in x0 {
        if anti.iter().filter(|z| mixed(g, v, z)).count() > 1 {
            return Err(format!("(vi): vertex {v} is mixed on two anticomponents"));
        }
    }
    // (vii), (viii)
    let big: Vec<&Vec<usize>> = anti.iter().filter(|z| z.len() >= 2).collect();
    let xz: Vec<Vec<usize>> = big.iter().map(|z| x0.iter().copied().filter(|&v| mixed(g, v, z)).collect()).collect();
    for (z, xz) in big.iter().zip(&xz) {
        if xz.is_empty() {
            return Err(format!("(vii): X_Z is empty for Z = {z:?}"));
        }
        if !z.iter().any(|&v| anticomplete(g, v, xz)) {
            return Err(format!("(viii): no vertex of Z = {z:?} is anticomplete to X_Z"));
        }
    }
    // (ix)
    let y_clique = y.iter().all(|&v| complete(g, v, &y));
    let isolated = |k: usize| {
        big.iter().enumerate().filter(|&(j, _)| j != k).all(|(_, z)| xz[k].iter().all(|&v| anticomplete(g, v, z)))
    };
    if !y_clique && !(0..big.len()).any(isolated) {
        return Err("(ix): no big anticomponent has an isolated X_Z".into());
    }
    Ok(())
}

/// Checks that `(A, B, C, L, T)` is a split divide of `g`, from the
/// definition.
pub fn split_divide(g: &Graph, a: &[usize], b: &[usize], c: &[usize], l: &[usize], t: &[usize]) -> Result<(), String> {
    let mut all: Vec<usize> = [a, b, c, l, t].concat();
    all.sort_unstable();
    if all != (0..g.n()).collect::<Vec<_>>() {
        return Err("sets are not a partition of V(G)".into());
    }
    let ct = [c, t].concat();
    let bc = [b, c].concat();
    let checks = [
        (a.len() >= 2, "|A| >= 2"),
        (a.iter().all(|&v| complete(g, v, b)), "A complete to B"),
        (a.iter().all(|&v| anticomplete(g, v, &ct)), "A anticomplete to C u T"),
        (a.iter().any(|&v| complete(g, v, l)), "some vertex of A complete to L"),
        (!l.is_empty() && l.iter().all(|&v| complete(g, v, l)), "L a non-empty clique"),
        (l.iter().all(|&v| mixed(g, v, a)), "L mixed on A"),
        (l.iter().all(|&v| complete(g, v, &bc)), "L complete to B u C"),
        (c.len() >= 2, "|C| >= 2"),
        (c.iter().any(|&v| complete(g, v, b)), "some vertex of C complete to B"),
        (
            c.iter().all(|&v| parts(g, b, true).iter().all(|q| !mixed(g, v, q))),
            "no vertex of C mixed on an anticomponent of B",
        ),
        (t.iter().all(|&v| anticomplete(g, v, t)), "T stable"),
        (t.iter().all(|&v| anticomplete(g, v, c)), "T anticomplete to C"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Err(what.to_string()),
        None => Ok(()),
    }
}
