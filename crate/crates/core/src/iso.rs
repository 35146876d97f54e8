//! Backtracking isomorphism search between finite multiplication tables.
//!
//! Elements are first split into candidate classes by an invariant
//! signature. The search then assigns one unmapped element at a time and
//! closes the partial map under products, so every assignment immediately
//! forces the images of everything it generates together with what is
//! already mapped. A conflict (two images for one element, or two
//! elements on one image) prunes the branch.

/// A finite set with a total binary operation, indexed `0..size`.
pub trait Magma {
    fn size(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
}

/// Checks that `map` is a bijection from `a` onto `b` preserving products.
pub fn is_isomorphism<A: Magma + ?Sized, B: Magma + ?Sized>(a: &A, b: &B, map: &[usize]) -> bool {
    let n = a.size();
    if n != b.size() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|x| (0..n).all(|y| map[a.op(x, y)] == b.op(map[x], map[y])))
}

/// Searches for an isomorphism `a -> b` that maps each element to an element
/// with an equal signature and respects every pair in `fixed`.
pub fn find_isomorphism<A, B, S>(a: &A, b: &B, sig_a: &[S], sig_b: &[S], fixed: &[(usize, usize)]) -> Option<Vec<usize>>
where
    A: Magma + ?Sized,
    B: Magma + ?Sized,
    S: Ord + Clone,
{
    let n = a.size();
    if n != b.size() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let mut sa: Vec<S> = sig_a.to_vec();
    let mut sb: Vec<S> = sig_b.to_vec();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // class id per element, shared between both sides
    let mut classes: Vec<S> = sa;
    classes.dedup();
    let class_of = |s: &S| classes.binary_search(s).expect("signature present");
    let class_a: Vec<usize> = sig_a.iter().map(class_of).collect();
    let class_b: Vec<usize> = sig_b.iter().map(class_of).collect();
    let mut members_b: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    for (y, &c) in class_b.iter().enumerate() {
        members_b[c].push(y);
    }

    let mut search = Search {
        a,
        b,
        class_a,
        class_b,
        members_b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        mapped: Vec::with_capacity(n),
        queue: Vec::new(),
    };
    for &(x, y) in fixed {
        if !search.assign(x, y) {
            return None;
        }
    }
    if search.solve() {
        Some(search.map)
    } else {
        None
    }
}

struct Search<'a, A: ?Sized, B: ?Sized> {
    a: &'a A,
    b: &'a B,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    members_b: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    mapped: Vec<usize>,
    queue: Vec<usize>,
}

impl<A: Magma + ?Sized, B: Magma + ?Sized> Search<'_, A, B> {
    fn set(&mut self, x: usize, y: usize) -> bool {
        if self.map[x] != usize::MAX {
            return self.map[x] == y;
        }
        if self.used[y] || self.class_a[x] != self.class_b[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.mapped.push(x);
        self.queue.push(x);
        true
    }

    /// Assigns `x -> y` and closes the map under products.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if !self.set(x, y) {
            self.queue.clear();
            return false;
        }
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let mut i = 0;
            while i < self.mapped.len() {
                let z = self.mapped[i];
                i += 1;
                let pairs = [(x, z), (z, x)];
                for (u, v) in pairs {
                    let p = self.a.op(u, v);
                    let q = self.b.op(self.map[u], self.map[v]);
                    if !self.set(p, q) {
                        self.queue.clear();
                        return false;
                    }
                }
            }
        }
        self.queue.clear();
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.mapped.len() > mark {
            let x = self.mapped.pop().expect("non-empty");
            self.used[self.map[x]] = false;
            self.map[x] = usize::MAX;
        }
    }

    fn solve(&mut self) -> bool {
        let n = self.map.len();
        if self.mapped.len() == n {
            return true;
        }
        // most constrained unmapped element
        let mut best: Option<(usize, usize)> = None;
        for x in 0..n {
            if self.map[x] != usize::MAX {
                continue;
            }
            let free = self.members_b[self.class_a[x]]
                .iter()
                .filter(|&&y| !self.used[y])
                .count();
            if free == 0 {
                return false;
            }
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((x, free));
            }
        }
        let (x, _) = best.expect("some element unmapped");
        let candidates = self.members_b[self.class_a[x]].clone();
        let mark = self.mapped.len();
        for y in candidates {
            if self.used[y] {
                continue;
            }
            if self.assign(x, y) && self.solve() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Cyclic(usize);
    impl Magma for Cyclic {
        fn size(&self) -> usize {
            self.0
        }
        fn op(&self, a: usize, b: usize) -> usize {
            (a + b) % self.0
        }
    }

    struct Klein;
    impl Magma for Klein {
        fn size(&self) -> usize {
            4
        }
        fn op(&self, a: usize, b: usize) -> usize {
            a ^ b
        }
    }

    #[test]
    fn cyclic_self_iso() {
        let sig = vec![0u8; 6];
        let m = find_isomorphism(&Cyclic(6), &Cyclic(6), &sig, &sig, &[(0, 0)]).unwrap();
        assert!(is_isomorphism(&Cyclic(6), &Cyclic(6), &m));
    }

    #[test]
    fn c4_is_not_klein() {
        let sig = vec![0u8; 4];
        assert!(find_isomorphism(&Cyclic(4), &Klein, &sig, &sig, &[(0, 0)]).is_none());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(!is_isomorphism(&Klein, &Klein, &[0, 1, 1, 3]));
        assert!(is_isomorphism(&Klein, &Klein, &[0, 2, 1, 3]));
    }
}
