//! Small shared data structures: union-find, and a signed variant that
//! tracks equalities of the form `x = y` or `x = y^-1` in a free group.

/// Disjoint-set forest with path compression and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if already joined.
    pub(crate) fn unite(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Union-find over group generators where each element carries a sign
/// relative to its class root: `x = root` or `x = root^-1`.
///
/// Uniting an element with itself under a negative sign does not fail;
/// it marks the class as torsion (`root = root^-1`, so every member
/// squares to the identity and all members of the class are equal).
#[derive(Clone, Debug)]
pub(crate) struct SignedUnionFind {
    parent: Vec<usize>,
    /// Sign of the element relative to its parent: `false` is positive.
    negated: Vec<bool>,
    size: Vec<usize>,
    torsion: Vec<bool>,
}

impl SignedUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        SignedUnionFind {
            parent: (0..n).collect(),
            negated: vec![false; n],
            size: vec![1; n],
            torsion: vec![false; n],
        }
    }

    /// Returns the class root and the sign of `x` relative to it.
    pub(crate) fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (root, parent_sign) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.negated[x] ^= parent_sign;
        let sign = if self.torsion[root] {
            false
        } else {
            self.negated[x]
        };
        (root, sign)
    }

    /// Records `a = b` (when `negated` is false) or `a = b^-1`.
    ///
    /// Returns true if this changed anything: either two classes were
    /// joined or an existing class became torsion.
    pub(crate) fn unite(&mut self, a: usize, b: usize, negated: bool) -> bool {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        if ra == rb {
            let consistent = sa == (sb ^ negated);
            if consistent || self.torsion[ra] {
                return false;
            }
            self.torsion[ra] = true;
            return true;
        }
        // a = b^negated with a = ra^sa, b = rb^sb gives ra = rb^(sa^sb^negated).
        let rel = sa ^ sb ^ negated;
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.negated[small] = rel;
        self.size[big] += self.size[small];
        self.torsion[big] |= self.torsion[small];
        if self.torsion[big] {
            self.torsion[small] = true;
        }
        true
    }

    pub(crate) fn is_torsion(&mut self, x: usize) -> bool {
        let (root, _) = self.find(x);
        self.torsion[root]
    }
}
