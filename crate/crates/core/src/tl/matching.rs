use std::fmt;

/// A noncrossing perfect matching of `2n` boundary points: top points
/// `0..n` (left to right) and bottom points `n..2n` (left to right).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    partner: Vec<usize>,
}

impl PlanarMatching {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { n, partner }
    }

    /// The cup-cap diagram `E_i` (1-based, `1 <= i < n`).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "E_{i} needs 1 <= i < {n}");
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b;
        m.partner[b] = a;
        m.partner[n + a] = n + b;
        m.partner[n + b] = n + a;
        m
    }

    /// Validates perfectness and planarity.
    pub fn from_partners(n: usize, partner: Vec<usize>) -> Option<Self> {
        if partner.len() != 2 * n {
            return None;
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= 2 * n || q == p || partner[q] != p {
                return None;
            }
        }
        let m = Self { n, partner };
        m.is_planar().then_some(m)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Position of a boundary point when walking the rectangle boundary
    /// clockwise: along the top, then back along the bottom.
    fn circle_pos(&self, p: usize) -> usize {
        if p < self.n {
            p
        } else {
            3 * self.n - 1 - p
        }
    }

    fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| {
                let (a, b) = (self.circle_pos(p), self.circle_pos(self.partner[p]));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.iter().all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Number of through-strands (chords joining top to bottom).
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] >= self.n).count()
    }

    /// Stacks `self` on top of `other`; returns the reduced diagram and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, other: &Self) -> (Self, usize) {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut partner = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];

        // Walks from an outer point into the middle until leaving again.
        // `in_top` tells whether we are currently in `self` (upper layer).
        let walk = |start_top: bool, start: usize, seen_mid: &mut Vec<bool>| -> usize {
            let (mut in_top, mut p) = (start_top, start);
            loop {
                let q = if in_top { self.partner[p] } else { other.partner[p] };
                if in_top {
                    if q < n {
                        return q;
                    }
                    // self's bottom = middle point q-n, enter other at its top
                    seen_mid[q - n] = true;
                    in_top = false;
                    p = q - n;
                } else {
                    if q >= n {
                        return q;
                    }
                    seen_mid[q] = true;
                    in_top = true;
                    p = q + n;
                }
            }
        };

        for i in 0..n {
            if partner[i] == usize::MAX {
                let end = walk(true, i, &mut seen_mid);
                // end < n means another top point of self; otherwise a bottom point of other
                partner[i] = end;
                partner[end] = i;
            }
        }
        for j in n..2 * n {
            if partner[j] == usize::MAX {
                let end = walk(false, j, &mut seen_mid);
                partner[j] = end;
                partner[end] = j;
            }
        }

        // every unseen middle point lies on a closed loop
        let mut loops = 0;
        for m in 0..n {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            let mut p = m;
            let mut in_top = true;
            loop {
                seen_mid[p] = true;
                let q = if in_top { self.partner[p + n] - n } else { other.partner[p] };
                // q is again a middle point (loops never touch the boundary)
                in_top = !in_top;
                if seen_mid[q] {
                    break;
                }
                p = q;
            }
        }
        (Self { n, partner }, loops)
    }

    /// Loops formed by joining top point `j` to bottom point `j` for every `j`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
            }
        }
        loops
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| format!("{}-{}", label(self.n, p), label(self.n, self.partner[p])))
            .collect();
        write!(f, "[{}]", pairs.join(" "))
    }
}

fn label(n: usize, p: usize) -> String {
    if p < n {
        format!("t{}", p + 1)
    } else {
        format!("b{}", p - n + 1)
    }
}

/// Calls `f` on every planar matching of `n` strands (Catalan many), without
/// collecting them.
pub fn for_each_matching(n: usize, mut f: impl FnMut(&PlanarMatching)) {
    // Dyck words over the boundary circle: an opener is matched with the
    // closer that balances it.
    let mut partner = vec![usize::MAX; 2 * n];
    let mut stack = Vec::with_capacity(n);
    let point = |pos: usize| if pos < n { pos } else { 3 * n - 1 - pos };
    fn rec(
        pos: usize,
        n: usize,
        opened: usize,
        stack: &mut Vec<usize>,
        partner: &mut Vec<usize>,
        point: &dyn Fn(usize) -> usize,
        f: &mut dyn FnMut(&PlanarMatching),
    ) {
        if pos == 2 * n {
            f(&PlanarMatching { n, partner: partner.clone() });
            return;
        }
        if opened < n {
            stack.push(pos);
            rec(pos + 1, n, opened + 1, stack, partner, point, f);
            stack.pop();
        }
        if let Some(open) = stack.pop() {
            let (a, b) = (point(open), point(pos));
            partner[a] = b;
            partner[b] = a;
            rec(pos + 1, n, opened, stack, partner, point, f);
            stack.push(open);
        }
    }
    rec(0, n, 0, &mut stack, &mut partner, &point, &mut f);
}

pub fn all_matchings(n: usize) -> Vec<PlanarMatching> {
    let mut out = Vec::new();
    for_each_matching(n, |m| out.push(m.clone()));
    out
}

pub fn count_matchings(n: usize) -> u64 {
    let mut c = 0u64;
    for_each_matching(n, |_| c += 1);
    c
}
