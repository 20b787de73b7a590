//! Finite-dimensional vector-lattice structure of nonnegative matrices.
//!
//! In the coordinate lattice every ideal is a band and is spanned by a
//! subset of the standard basis vectors, so ideals are just index sets.
//! The digraph convention is fixed throughout: edge `i -> j` iff entry
//! `(i, j)` is positive (operators act on column vectors). A coordinate
//! ideal, i.e. the span of `{e_j : j in S}`, is invariant under a
//! nonnegative matrix exactly when no edge enters `S` from outside.
//!
//! Index sets are 1-based to match the external serialization; matrix
//! entries stay 0-based.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::{Error, Mat};

/// A subset of `{1..n}`, standing for the coordinate ideal it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordSet {
    n: usize,
    members: BTreeSet<usize>,
}

impl CoordSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::domain(format!(
                "coordinate indices must lie in 1..={n}"
            )));
        }
        Ok(CoordSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        CoordSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        CoordSet {
            n,
            members: (1..=n).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.n
    }

    /// Nontrivial means neither empty nor everything.
    pub fn is_nontrivial(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    /// Sorted 1-based members.
    pub fn members(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    /// Sorted 0-based indices, for slicing matrices.
    pub fn zero_based(&self) -> Vec<usize> {
        self.members.iter().map(|&i| i - 1).collect()
    }

    pub fn intersect(&self, other: &CoordSet) -> CoordSet {
        assert_eq!(self.n, other.n, "ambient mismatch");
        CoordSet {
            n: self.n,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    /// The disjoint complement: in the coordinate lattice this is the
    /// complementary index set, and applying it twice returns the set.
    pub fn disjoint_complement(&self) -> CoordSet {
        CoordSet {
            n: self.n,
            members: (1..=self.n).filter(|i| !self.members.contains(i)).collect(),
        }
    }
}

fn require_nonnegative_square(a: &Mat, what: &str) -> Result<(), Error> {
    a.require_square(what)?;
    if let Some((r, c)) = a.first_negative_entry() {
        return Err(Error::domain(format!(
            "{what} requires a nonnegative matrix; entry ({}, {}) is {}",
            r + 1,
            c + 1,
            a.at(r, c)
        )));
    }
    Ok(())
}

/// The null ideal of a nonnegative matrix: the coordinates whose columns
/// vanish. For nonnegative `A` these generate exactly the ideal of
/// vectors `x` with `A|x| = 0`.
pub fn null_ideal(a: &Mat) -> Result<CoordSet, Error> {
    require_nonnegative_square(a, "null ideal")?;
    let n = a.rows();
    CoordSet::new(
        n,
        (1..=n).filter(|&j| (0..n).all(|i| a.at(i, j - 1).is_zero())),
    )
}

/// The range ideal of a nonnegative matrix: the coordinates with a
/// nonzero row, i.e. those reachable by `A` on the positive cone.
pub fn range_ideal(a: &Mat) -> Result<CoordSet, Error> {
    require_nonnegative_square(a, "range ideal")?;
    let n = a.rows();
    CoordSet::new(
        n,
        (1..=n).filter(|&i| (0..n).any(|j| !a.at(i - 1, j).is_zero())),
    )
}

/// The four-band decomposition induced by a nonnegative idempotent, with
/// the block identities forced by idempotency already verified.
#[derive(Clone, Debug)]
pub struct BandSplit {
    pub l1: CoordSet,
    pub l2: CoordSet,
    pub l3: CoordSet,
    pub l4: CoordSet,
    /// Block of `E` on rows `L2`, columns `L3`.
    pub x: Option<Mat>,
    /// Diagonal block on `L3`; itself idempotent with zero null ideal and
    /// full range ideal.
    pub g: Option<Mat>,
    /// Block on rows `L3`, columns `L4`.
    pub y: Option<Mat>,
    /// Block on rows `L2`, columns `L4`; equals `X Y`.
    pub z: Option<Mat>,
}

/// Splits the coordinates by the null and range ideals of a nonnegative
/// idempotent `E`:
///
/// ```text
/// L1 = N(E) inter R(E)^d      L2 = N(E) inter R(E)^dd
/// L3 = N(E)^d inter R(E)^dd   L4 = N(E)^d inter R(E)^d
/// ```
///
/// and verifies the block shape this forces: rows `L1, L4` and columns
/// `L1, L2` vanish, and the surviving blocks satisfy `G^2 = G`, `XG = X`,
/// `GY = Y`, `Z = XY`, with `G` strictly positive in the lattice sense
/// (no zero column, no zero row). A violation is reported as an internal
/// error since it cannot happen for a genuine nonnegative idempotent.
pub fn band_split(e: &Mat) -> Result<BandSplit, Error> {
    require_nonnegative_square(e, "band split")?;
    if !e.is_idempotent()? {
        return Err(Error::domain("band split requires an exact idempotent"));
    }
    let n = e.rows();
    let null = null_ideal(e)?;
    let range = range_ideal(e)?;
    let null_c = null.disjoint_complement();
    let range_c = range.disjoint_complement();
    let l1 = null.intersect(&range_c);
    let l2 = null.intersect(&range);
    let l3 = null_c.intersect(&range);
    let l4 = null_c.intersect(&range_c);

    // Definitional zeros: zero rows are exactly the complement of the
    // range ideal, zero columns exactly the null ideal.
    for &i in l1.zero_based().iter().chain(l4.zero_based().iter()) {
        if (0..n).any(|j| !e.at(i, j).is_zero()) {
            return Err(Error::internal("nonzero row outside the range ideal"));
        }
    }
    for &j in l1.zero_based().iter().chain(l2.zero_based().iter()) {
        if (0..n).any(|i| !e.at(i, j).is_zero()) {
            return Err(Error::internal("nonzero column inside the null ideal"));
        }
    }

    let block = |rows: &CoordSet, cols: &CoordSet| -> Option<Mat> {
        if rows.is_empty() || cols.is_empty() {
            return None;
        }
        Some(
            e.submatrix(&rows.zero_based(), &cols.zero_based())
                .expect("indices in range"),
        )
    };
    let x = block(&l2, &l3);
    let g = block(&l3, &l3);
    let y = block(&l3, &l4);
    let z = block(&l2, &l4);

    if let Some(g) = &g {
        if !g.is_idempotent()? {
            return Err(Error::internal("diagonal block G is not idempotent"));
        }
        if !null_ideal(g)?.is_empty() {
            return Err(Error::internal("diagonal block G has a zero column"));
        }
        if !range_ideal(g)?.is_full() {
            return Err(Error::internal("diagonal block G has a zero row"));
        }
        if let Some(x) = &x {
            if x.checked_mul(g)? != *x {
                return Err(Error::internal("XG = X fails"));
            }
        }
        if let Some(y) = &y {
            if g.checked_mul(y)? != *y {
                return Err(Error::internal("GY = Y fails"));
            }
        }
    }
    match (&x, &y, &z) {
        (Some(x), Some(y), Some(z)) => {
            if x.checked_mul(y)? != *z {
                return Err(Error::internal("Z = XY fails"));
            }
        }
        (_, _, Some(z)) if !z.is_zero() => {
            return Err(Error::internal(
                "Z = XY fails: XY is empty but Z is nonzero",
            ));
        }
        _ => {}
    }

    Ok(BandSplit {
        l1,
        l2,
        l3,
        l4,
        x,
        g,
        y,
        z,
    })
}

/// Frobenius normal form data: a permutation putting a nonnegative matrix
/// into block upper triangular shape with ideal-irreducible diagonal
/// blocks.
#[derive(Clone, Debug)]
pub struct FrobeniusForm {
    /// `order[a]` is the original (0-based) index placed at position `a`;
    /// the permuted matrix is `P^T S P` with `P[order[a], a] = 1`.
    pub order: Vec<usize>,
    pub block_sizes: Vec<usize>,
    /// Diagonal blocks of the permuted matrix, in order.
    pub blocks: Vec<Mat>,
}

impl FrobeniusForm {
    /// 1-based permutation as serialized externally.
    pub fn permutation_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|&i| i + 1).collect()
    }
}

/// Tarjan strongly connected components of the support digraph
/// (`i -> j` iff `S[i][j] > 0`), as vertex lists.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        counter: usize,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        comps: Vec<Vec<usize>>,
    }
    fn connect(v: usize, st: &mut State) {
        st.index[v] = Some(st.counter);
        st.low[v] = st.counter;
        st.counter += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for &w in &st.adj[v] {
            if st.index[w].is_none() {
                connect(w, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack[w] {
                st.low[v] = st.low[v].min(st.index[w].unwrap());
            }
        }
        if st.low[v] == st.index[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("stack underflow");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            st.comps.push(comp);
        }
    }
    let n = adj.len();
    let mut st = State {
        adj,
        counter: 0,
        index: vec![None; n],
        low: vec![0; n],
        stack: Vec::new(),
        on_stack: vec![false; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.index[v].is_none() {
            connect(v, &mut st);
        }
    }
    st.comps
}

fn support_adjacency(mats: &[&Mat]) -> Vec<Vec<usize>> {
    let n = mats[0].rows();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if mats.iter().any(|m| !m.at(i, j).is_zero()) {
                adj[i].push(j);
            }
        }
    }
    adj
}

/// Orders the strongly connected components topologically, ties broken by
/// the smallest original vertex index, so the result is deterministic and
/// already-triangular input maps to the identity order.
fn condense_topological(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let comps = tarjan_scc(adj);
    let ncomp = comps.len();
    let n = adj.len();
    let mut comp_of = vec![0usize; n];
    for (cid, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = cid;
        }
    }
    let mut indegree = vec![0usize; ncomp];
    let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for (u, outs) in adj.iter().enumerate() {
        for &v in outs {
            let (cu, cv) = (comp_of[u], comp_of[v]);
            if cu != cv && edges[cu].insert(cv) {
                indegree[cv] += 1;
            }
        }
    }
    // Kahn with a min-heap keyed on the smallest vertex of the component.
    let mut ready: BTreeSet<(usize, usize)> = (0..ncomp)
        .filter(|&c| indegree[c] == 0)
        .map(|c| (comps[c][0], c))
        .collect();
    let mut ordered = Vec::with_capacity(ncomp);
    while let Some(&(key, c)) = ready.iter().next() {
        ready.remove(&(key, c));
        ordered.push(comps[c].clone());
        for &next in &edges[c] {
            indegree[next] -= 1;
            if indegree[next] == 0 {
                ready.insert((comps[next][0], next));
            }
        }
    }
    ordered
}

/// Frobenius normal form of a nonnegative square matrix: strongly
/// connected components of the support digraph, topologically ordered so
/// that `P^T S P` is block upper triangular with ideal-irreducible
/// diagonal blocks.
pub fn frobenius_form(s: &Mat) -> Result<FrobeniusForm, Error> {
    require_nonnegative_square(s, "Frobenius form")?;
    let adj = support_adjacency(&[s]);
    let ordered = condense_topological(&adj);
    let mut order = Vec::with_capacity(s.rows());
    let mut block_sizes = Vec::with_capacity(ordered.len());
    for comp in &ordered {
        block_sizes.push(comp.len());
        order.extend(comp.iter().copied());
    }
    let permuted = s.permute_symmetric(&order)?;
    // Self-check the block triangular shape; the topological order makes
    // this impossible to violate.
    let mut offset = 0;
    let mut blocks = Vec::with_capacity(block_sizes.len());
    for &size in &block_sizes {
        let idx: Vec<usize> = (offset..offset + size).collect();
        blocks.push(permuted.submatrix(&idx, &idx)?);
        for r in offset..offset + size {
            for c in 0..offset {
                if !permuted.at(r, c).is_zero() {
                    return Err(Error::internal("Frobenius permutation left a lower block"));
                }
            }
        }
        offset += size;
    }
    Ok(FrobeniusForm {
        order,
        block_sizes,
        blocks,
    })
}

fn validate_family(family: &[Mat], what: &str) -> Result<usize, Error> {
    let first = family
        .first()
        .ok_or_else(|| Error::domain(format!("{what} needs a nonempty family")))?;
    first.require_square(what)?;
    let n = first.rows();
    for m in family {
        if m.shape() != (n, n) {
            return Err(Error::shape(format!(
                "{what}: family members must share one size"
            )));
        }
        require_nonnegative_square(m, what)?;
    }
    Ok(n)
}

/// Searches for a nontrivial coordinate ideal invariant under every
/// matrix in the family. Returns the topologically first strongly
/// connected component of the union support digraph when one exists,
/// `None` when the family is ideal-irreducible.
pub fn is_ideal_reducible(family: &[Mat]) -> Result<Option<CoordSet>, Error> {
    let n = validate_family(family, "ideal reducibility")?;
    let refs: Vec<&Mat> = family.iter().collect();
    let adj = support_adjacency(&refs);
    let ordered = condense_topological(&adj);
    if ordered.len() <= 1 {
        return Ok(None);
    }
    // A source component receives no edges, so the ideal it spans is
    // invariant under the whole family.
    let invariant = CoordSet::new(n, ordered[0].iter().map(|&i| i + 1))?;
    debug_assert!(invariant.is_nontrivial());
    Ok(Some(invariant))
}

/// Searches for one permutation triangularizing every member of the
/// family simultaneously, which exists iff every strongly connected
/// component of the union support digraph is a singleton. The prefixes of
/// the returned order form the full chain of invariant coordinate ideals.
pub fn ideal_triangularizable(family: &[Mat]) -> Result<Option<Vec<usize>>, Error> {
    validate_family(family, "ideal triangularizability")?;
    let refs: Vec<&Mat> = family.iter().collect();
    let adj = support_adjacency(&refs);
    let ordered = condense_topological(&adj);
    if ordered.iter().any(|comp| comp.len() > 1) {
        return Ok(None);
    }
    let order: Vec<usize> = ordered.into_iter().flatten().collect();
    for m in family {
        let permuted = m.permute_symmetric(&order)?;
        for r in 0..permuted.rows() {
            for c in 0..r {
                if !permuted.at(r, c).is_zero() {
                    return Err(Error::internal("triangularizing order left a lower entry"));
                }
            }
        }
    }
    Ok(Some(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempot::{build_example, rank_one_idempotent, ExampleName};
    use crate::rat;

    #[test]
    fn null_ideal_of_zero_full_and_strictly_positive() {
        assert!(null_ideal(&Mat::zeros(3, 3)).unwrap().is_full());
        let positive = Mat::from_fn(3, 3, |_, _| rat(2));
        assert!(null_ideal(&positive).unwrap().is_empty());
        assert!(null_ideal(&Mat::from_int_rows(&[vec![1, -1], vec![0, 1]])).is_err());
    }

    #[test]
    fn null_and_range_ideals_of_the_ks7_pair() {
        let (e, f) = build_example(&ExampleName::Ks7).unwrap();
        assert_eq!(null_ideal(&e).unwrap().members(), vec![1, 3, 5, 7]);
        assert_eq!(range_ideal(&f).unwrap().members(), vec![2, 3, 4, 5]);
        assert!(range_ideal(&Mat::identity(4)).unwrap().is_full());
        assert!(range_ideal(&Mat::zeros(2, 2)).unwrap().is_empty());
    }

    #[test]
    fn disjoint_complement_is_an_involution() {
        let s = CoordSet::new(7, [2, 5]).unwrap();
        assert_eq!(s.disjoint_complement().members(), vec![1, 3, 4, 6, 7]);
        assert_eq!(s.disjoint_complement().disjoint_complement(), s);
        assert!(CoordSet::empty(4).disjoint_complement().is_full());
        let s = CoordSet::new(4, [1, 3]).unwrap();
        assert_eq!(s.disjoint_complement().members(), vec![2, 4]);
    }

    #[test]
    fn band_split_of_identity_is_all_l3() {
        let split = band_split(&Mat::identity(3)).unwrap();
        assert!(split.l1.is_empty() && split.l2.is_empty() && split.l4.is_empty());
        assert!(split.l3.is_full());
        assert_eq!(split.g, Some(Mat::identity(3)));
    }

    #[test]
    fn band_split_of_rank_one_idempotent() {
        // E = u v^T with u = (1,1,0), v = (0,1,1): null ideal {1}, range
        // ideal {1,2}, so L1 = {}, L2 = {1}, L3 = {2}, L4 = {3}.
        let e = rank_one_idempotent(&[rat(1), rat(1), rat(0)], &[rat(0), rat(1), rat(1)]).unwrap();
        let split = band_split(&e).unwrap();
        assert!(split.l1.is_empty());
        assert_eq!(split.l2.members(), vec![1]);
        assert_eq!(split.l3.members(), vec![2]);
        assert_eq!(split.l4.members(), vec![3]);
        // Oracle: explicit blocks of the 3x3 matrix.
        assert_eq!(split.x, Some(Mat::from_int_rows(&[vec![1]])));
        assert_eq!(split.g, Some(Mat::from_int_rows(&[vec![1]])));
        assert_eq!(split.y, Some(Mat::from_int_rows(&[vec![1]])));
        assert_eq!(split.z, Some(Mat::from_int_rows(&[vec![1]])));
    }

    #[test]
    fn band_split_self_checks_on_the_ks7_pair() {
        let (e, f) = build_example(&ExampleName::Ks7).unwrap();
        for m in [e, f] {
            let split = band_split(&m).unwrap();
            // Oracle: recompute the block identities by direct
            // multiplication on extracted submatrices.
            if let (Some(g), Some(x), Some(y), Some(z)) = (&split.g, &split.x, &split.y, &split.z) {
                assert_eq!(g.checked_mul(g).unwrap(), *g);
                assert_eq!(x.checked_mul(g).unwrap(), *x);
                assert_eq!(g.checked_mul(y).unwrap(), *y);
                assert_eq!(x.checked_mul(y).unwrap(), *z);
            }
        }
    }

    #[test]
    fn band_split_rejects_non_idempotents() {
        let j = Mat::jordan_nilpotent(2);
        assert!(matches!(band_split(&j), Err(Error::Domain(_))));
    }

    #[test]
    fn frobenius_form_of_a_cycle_is_one_block() {
        let p = Mat::from_int_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let form = frobenius_form(&p).unwrap();
        assert_eq!(form.block_sizes, vec![3]);
    }

    #[test]
    fn frobenius_form_of_strictly_upper_triangular_pattern() {
        let s = Mat::from_int_rows(&[vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]]);
        let form = frobenius_form(&s).unwrap();
        assert_eq!(form.block_sizes, vec![1, 1, 1]);
        assert_eq!(form.order, vec![0, 1, 2]);
    }

    #[test]
    fn frobenius_form_orders_diag_plus_unit_like_the_oracle() {
        // S = diag(3,2,1) + E_12: support edges are loops plus 1 -> 2, so
        // index 1 must precede index 2.
        let s = Mat::from_int_rows(&[vec![3, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]);
        let form = frobenius_form(&s).unwrap();
        assert_eq!(form.block_sizes, vec![1, 1, 1]);
        let pos = |i: usize| form.order.iter().position(|&v| v == i).unwrap();
        assert!(pos(0) < pos(1));
        // Oracle: exhaustive search over all 6 permutations for valid
        // block-upper-triangular orders; the returned one must be among
        // them and must be the lexicographically smallest by tie-break.
        let mut valid = Vec::new();
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for order in perms {
            let p = s.permute_symmetric(&order).unwrap();
            let mut upper = true;
            for r in 0..3 {
                for c in 0..r {
                    upper &= p.at(r, c).is_zero();
                }
            }
            if upper {
                valid.push(order.to_vec());
            }
        }
        assert!(valid.contains(&form.order));
        assert_eq!(form.order, vec![0, 1, 2]);
    }

    #[test]
    fn frobenius_form_is_idempotent_on_permuted_matrices() {
        let mats = vec![
            Mat::from_int_rows(&[vec![3, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]),
            Mat::from_int_rows(&[
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 1],
                vec![0, 0, 1, 1],
                vec![0, 0, 1, 0],
            ]),
        ];
        for s in mats {
            let form = frobenius_form(&s).unwrap();
            let permuted = s.permute_symmetric(&form.order).unwrap();
            let again = frobenius_form(&permuted).unwrap();
            let identity: Vec<usize> = (0..s.rows()).collect();
            assert_eq!(again.order, identity);
            assert_eq!(again.block_sizes, form.block_sizes);
        }
    }

    #[test]
    fn frobenius_blocks_are_strongly_connected() {
        let s = Mat::from_int_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ]);
        let form = frobenius_form(&s).unwrap();
        assert_eq!(form.block_sizes, vec![2, 2]);
        for block in &form.blocks {
            let sub = frobenius_form(block).unwrap();
            assert_eq!(
                sub.block_sizes.len(),
                1,
                "diagonal block must be irreducible"
            );
        }
    }

    #[test]
    fn all_ones_rank_one_is_ideal_irreducible() {
        let a = Mat::from_fn(3, 3, |_, _| rat(1));
        assert!(is_ideal_reducible(&[a]).unwrap().is_none());
        let p = Mat::from_int_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(is_ideal_reducible(&[p]).unwrap().is_none());
    }

    #[test]
    fn unit_matrix_has_an_invariant_ideal() {
        // E_12 maps e_1 to 0 and e_2 to e_1, so span{e_1} is invariant.
        let found = is_ideal_reducible(&[Mat::unit(2, 0, 1)]).unwrap().unwrap();
        assert_eq!(found.members(), vec![1]);
        // Verify invariance directly: no edge from outside into the set.
        let e12 = Mat::unit(2, 0, 1);
        for j in found.zero_based() {
            for i in 0..2 {
                if !e12.at(i, j).is_zero() {
                    assert!(found.contains(i + 1), "column support must stay inside");
                }
            }
        }
    }

    #[test]
    fn ideal_triangularizable_families() {
        let (e, f) = build_example(&ExampleName::Ks7).unwrap();
        let order = ideal_triangularizable(&[e, f])
            .unwrap()
            .expect("ks7 pair is ideal-triangularizable");
        assert_eq!(order.len(), 7);
        let all_ones = Mat::from_fn(3, 3, |_, _| rat(1));
        assert!(ideal_triangularizable(&[all_ones]).unwrap().is_none());
        let family = [Mat::diagonal(&[rat(1), rat(2)]), Mat::jordan_nilpotent(2)];
        assert_eq!(ideal_triangularizable(&family).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn ideal_triangularizable_implies_triangularizable() {
        let (e, f) = build_example(&ExampleName::Ks7).unwrap();
        assert!(ideal_triangularizable(&[e.clone(), f.clone()])
            .unwrap()
            .is_some());
        let report = crate::spanalg::is_triangularizable(7, &[e, f]).unwrap();
        assert!(report.pass, "coordinate chains are triangularizing chains");
    }

    #[test]
    fn null_and_range_ideal_emptiness_characterizations() {
        // N(A) is empty iff A has no zero column; the complement of R(A)
        // is empty iff A has no zero row.
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..50 {
            let n = 2 + (rng.below(3)) as usize;
            let a = crate::gen::sparse_nonneg_matrix(&mut rng, n, 3, 1, 2);
            let no_zero_col = (0..n).all(|j| (0..n).any(|i| !a.at(i, j).is_zero()));
            let no_zero_row = (0..n).all(|i| (0..n).any(|j| !a.at(i, j).is_zero()));
            assert_eq!(null_ideal(&a).unwrap().is_empty(), no_zero_col);
            assert_eq!(
                range_ideal(&a).unwrap().disjoint_complement().is_empty(),
                no_zero_row
            );
        }
    }
}
