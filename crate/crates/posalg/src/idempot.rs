//! Positive idempotents: pair validation, the squared-commutator identity,
//! the nine-word span, band semigroups, quadratic-minimal-polynomial
//! dimension bounds, and the built-in extremal examples.

use num_traits::Zero;

use crate::charpoly::minimal_poly;
use crate::lattice::{band_split, null_ideal, range_ideal};
use crate::report::Report;
use crate::span::{Inserted, SpanBuilder};
use crate::spanalg::{algebra_closure, spanning_word_check, Word};
use crate::{rat, Error, Mat, Rat};

/// Entrywise relation between `EF` and `FE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommOrder {
    /// `EF = FE`.
    Equal,
    /// `EF >= FE` with strict inequality somewhere.
    GreaterEqual,
    /// `EF <= FE` with strict inequality somewhere.
    LessEqual,
    Incomparable,
}

impl CommOrder {
    pub fn is_comparable(self) -> bool {
        self != CommOrder::Incomparable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CommOrder::Equal => "EF = FE",
            CommOrder::GreaterEqual => "EF >= FE",
            CommOrder::LessEqual => "EF <= FE",
            CommOrder::Incomparable => "incomparable",
        }
    }
}

/// A validated pair of positive idempotents with its order classification.
#[derive(Clone, Debug)]
pub struct IdempotentPair {
    pub e: Mat,
    pub f: Mat,
    pub order: CommOrder,
}

fn require_positive_idempotent(m: &Mat, name: &str) -> Result<(), Error> {
    m.require_square(name)?;
    if let Some((r, c)) = m.first_negative_entry() {
        return Err(Error::domain(format!(
            "{name} must be nonnegative; entry ({}, {}) is {}",
            r + 1,
            c + 1,
            m.at(r, c)
        )));
    }
    let sq = m.checked_mul(m)?;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if sq.at(r, c) != m.at(r, c) {
                return Err(Error::domain(format!(
                    "{name} is not idempotent: entry ({}, {}) of {name}^2 is {}, expected {}",
                    r + 1,
                    c + 1,
                    sq.at(r, c),
                    m.at(r, c)
                )));
            }
        }
    }
    Ok(())
}

/// Classifies the order between `AB` and `BA` for arbitrary matrices.
pub fn classify_order(a: &Mat, b: &Mat) -> Result<CommOrder, Error> {
    let ab = a.checked_mul(b)?;
    let ba = b.checked_mul(a)?;
    let ge = ab.entrywise_ge(&ba)?;
    let le = ba.entrywise_ge(&ab)?;
    Ok(match (ge, le) {
        (true, true) => CommOrder::Equal,
        (true, false) => CommOrder::GreaterEqual,
        (false, true) => CommOrder::LessEqual,
        (false, false) => CommOrder::Incomparable,
    })
}

/// Checks all pair invariants exactly and classifies the order relation.
pub fn validate_pair(e: &Mat, f: &Mat) -> Result<IdempotentPair, Error> {
    require_positive_idempotent(e, "E")?;
    require_positive_idempotent(f, "F")?;
    if e.shape() != f.shape() {
        return Err(Error::shape("E and F must have the same size"));
    }
    Ok(IdempotentPair {
        e: e.clone(),
        f: f.clone(),
        order: classify_order(e, f)?,
    })
}

fn order_hypothesis(e: &Mat, a: &Mat, what: &str) -> Result<CommOrder, Error> {
    let ae = a.checked_mul(e)?;
    let ea = e.checked_mul(a)?;
    let ge = ae.entrywise_ge(&ea)?;
    let le = ea.entrywise_ge(&ae)?;
    match (ge, le) {
        (true, true) => Ok(CommOrder::Equal),
        (true, false) => Ok(CommOrder::GreaterEqual),
        (false, true) => Ok(CommOrder::LessEqual),
        (false, false) => Err(Error::domain(format!(
            "{what} requires AE >= EA or AE <= EA entrywise; neither holds"
        ))),
    }
}

/// Conclusions forced on `A` by a positive idempotent `E` under the order
/// hypothesis `AE >= EA` or `AE <= EA`:
///
/// * strictly positive `E` (no zero column): `AE = EAE` and `(AE-EA)^2 = 0`;
/// * full range ideal (no zero row): `EA = EAE` and `(AE-EA)^2 = 0`;
/// * both: `AE = EA`.
///
/// `A` itself may have entries of any sign.
pub fn check_one_idem(e: &Mat, a: &Mat) -> Result<Report, Error> {
    require_positive_idempotent(e, "E")?;
    if a.shape() != e.shape() {
        return Err(Error::shape("A must match the size of E"));
    }
    let order = order_hypothesis(e, a, "the idempotent commutation check")?;

    let strictly_positive = null_ideal(e)?.is_empty();
    let full_range = range_ideal(e)?.is_full();
    let ae = a.checked_mul(e)?;
    let ea = e.checked_mul(a)?;
    let eae = e.checked_mul(&ae)?;
    let d = ae.checked_sub(&ea)?;
    let d2 = d.checked_mul(&d)?;

    let mut report = Report::new("one_idem");
    report.set("order", order.as_str());
    report.set("strictly_positive", strictly_positive);
    report.set("full_range", full_range);
    let mut any = false;
    if strictly_positive {
        any = true;
        report.assert_that("AE = EAE", ae == eae);
        report.assert_that("(AE-EA)^2 = 0 (a)", d2.is_zero());
    }
    if full_range {
        any = true;
        report.assert_that("EA = EAE", ea == eae);
        report.assert_that("(AE-EA)^2 = 0 (b)", d2.is_zero());
    }
    if strictly_positive && full_range {
        report.assert_that("AE = EA", ae == ea);
    }
    if !any {
        report.set("note", "neither hypothesis holds; nothing to assert");
    }
    Ok(report)
}

/// The squared-commutator identity for a positive idempotent `E` and a
/// positive `A` comparable with it: `(AE-EA)^2 E = E (AE-EA)^2 = 0`,
/// equivalently `(EA)^2 E = E A^2 E`. The report carries the four-band
/// split of `E` used in the argument.
pub fn check_key_identity(e: &Mat, a: &Mat) -> Result<Report, Error> {
    require_positive_idempotent(e, "E")?;
    if a.shape() != e.shape() {
        return Err(Error::shape("A must match the size of E"));
    }
    if let Some((r, c)) = a.first_negative_entry() {
        return Err(Error::domain(format!(
            "A must be nonnegative; entry ({}, {}) is {}",
            r + 1,
            c + 1,
            a.at(r, c)
        )));
    }
    let order = order_hypothesis(e, a, "the key identity")?;

    let ae = a.checked_mul(e)?;
    let ea = e.checked_mul(a)?;
    let d = ae.checked_sub(&ea)?;
    let d2 = d.checked_mul(&d)?;
    let eaea_e = ea.checked_mul(&ea)?.checked_mul(e)?;
    let ea2e = ea.checked_mul(a)?.checked_mul(e)?;

    let split = band_split(e)?;
    let mut report = Report::new("key_identity");
    report.set("order", order.as_str());
    report.set("band_L1", split.l1.members());
    report.set("band_L2", split.l2.members());
    report.set("band_L3", split.l3.members());
    report.set("band_L4", split.l4.members());
    report.assert_that("(AE-EA)^2 E = 0", d2.checked_mul(e)?.is_zero());
    report.assert_that("E (AE-EA)^2 = 0", e.checked_mul(&d2)?.is_zero());
    report.assert_that("(EA)^2 E = E A^2 E", eaea_e == ea2e);
    Ok(report)
}

/// The nine canonical words `1, E, F, EF, FE, EFE, FEF, (EF)^2, (FE)^2`
/// over a two-generator alphabet.
pub fn nine_words() -> Vec<Word> {
    vec![
        Word::identity(),
        Word(vec![0]),
        Word(vec![1]),
        Word(vec![0, 1]),
        Word(vec![1, 0]),
        Word(vec![0, 1, 0]),
        Word(vec![1, 0, 1]),
        Word(vec![0, 1, 0, 1]),
        Word(vec![1, 0, 1, 0]),
    ]
}

/// For a comparable pair of positive idempotents: the unital algebra they
/// generate is spanned by the nine canonical words, so its dimension is
/// at most 9; moreover `(EF)^2 E = EFE` and `(FE)^2 F = FEF`.
pub fn nine_word_span(pair: &IdempotentPair) -> Result<Report, Error> {
    if !pair.order.is_comparable() {
        return Err(Error::domain(
            "the nine-word span requires EF >= FE or EF <= FE; the pair is incomparable",
        ));
    }
    let n = pair.e.rows();
    let gens = [pair.e.clone(), pair.f.clone()];
    let mut report = spanning_word_check(n, &gens, &nine_words())?;
    report.check = "nine_word_span".to_string();
    report.set("order", pair.order.as_str());

    let (e, f) = (&pair.e, &pair.f);
    let ef = e.checked_mul(f)?;
    let fe = f.checked_mul(e)?;
    let efe = ef.checked_mul(e)?;
    let fef = fe.checked_mul(f)?;
    report.assert_that(
        "(EF)^2 E = EFE",
        ef.checked_mul(&ef)?.checked_mul(e)? == efe,
    );
    report.assert_that(
        "(FE)^2 F = FEF",
        fe.checked_mul(&fe)?.checked_mul(f)? == fef,
    );
    if report.dim.is_some_and(|d| d > 9) {
        report.fail(format!(
            "algebra dimension {} exceeds 9",
            report.dim.unwrap()
        ));
    }
    Ok(report)
}

/// Enumerates the multiplicative semigroup generated by `{E, F}` to
/// stabilization (capped at `n^2` distinct elements) and reports its size,
/// whether it equals `{E, F, EF, FE, EFE, FEF}` as a set, whether every
/// element is idempotent (the band property, with a witness word when it
/// fails), and the unital algebra dimension. When the band property holds
/// the set equality and the dimension bound 7 are enforced assertions.
pub fn band_semigroup(pair: &IdempotentPair) -> Result<Report, Error> {
    if !matches!(pair.order, CommOrder::GreaterEqual | CommOrder::Equal) {
        return Err(Error::domain("the band semigroup check requires EF >= FE"));
    }
    let n = pair.e.rows();
    let gens = [pair.e.clone(), pair.f.clone()];
    let names = vec!["E".to_string(), "F".to_string()];

    let mut report = Report::new("band_semigroup");
    report.set("order", pair.order.as_str());
    let mut elements: Vec<(Mat, Word)> = Vec::new();
    let push = |elements: &mut Vec<(Mat, Word)>, m: Mat, w: Word| -> bool {
        if elements.iter().any(|(x, _)| *x == m) {
            return false;
        }
        elements.push((m, w));
        true
    };
    for (g, gen) in gens.iter().enumerate() {
        push(&mut elements, gen.clone(), Word(vec![g]));
    }
    let cap = n * n;
    let mut next = 0;
    while next < elements.len() && elements.len() <= cap {
        for (g, gen) in gens.iter().enumerate() {
            let product = elements[next].0.checked_mul(gen)?;
            let word = elements[next].1.append(g);
            push(&mut elements, product, word);
        }
        next += 1;
    }
    report.set("semigroup_size", elements.len());
    if elements.len() > cap {
        report.set("is_band", false);
        report.fail(format!("semigroup did not stabilize within {cap} elements"));
        return Ok(report);
    }

    let non_idempotent = elements
        .iter()
        .find(|(m, _)| !m.is_idempotent().unwrap_or(false))
        .map(|(_, w)| w.clone());
    let is_band = non_idempotent.is_none();
    report.set("is_band", is_band);
    if let Some(word) = &non_idempotent {
        report.set("non_idempotent_word", word.to_string_with(&names));
    }

    // The six canonical products, deduplicated as matrices.
    let six = [
        Word(vec![0]),
        Word(vec![1]),
        Word(vec![0, 1]),
        Word(vec![1, 0]),
        Word(vec![0, 1, 0]),
        Word(vec![1, 0, 1]),
    ];
    let mut expected: Vec<Mat> = Vec::new();
    for w in &six {
        let m = w.evaluate(n, &gens)?;
        if !expected.contains(&m) {
            expected.push(m);
        }
    }
    let set_matches =
        elements.len() == expected.len() && elements.iter().all(|(m, _)| expected.contains(m));
    report.set("semigroup_is_six_products", set_matches);

    let alg = algebra_closure(n, &gens, true)?;
    report.dim = Some(alg.dim());
    if is_band {
        report.assert_that("band semigroup = {E, F, EF, FE, EFE, FEF}", set_matches);
        report.assert_that("algebra dimension <= 7", alg.dim() <= 7);
    }
    Ok(report)
}

/// Structure of the unital algebra of a comparable idempotent pair under
/// strictness hypotheses on `E`:
///
/// * if `E` has no zero column or no zero row, the algebra equals
///   `span{I, E, F, EF, FE, FEF}`;
/// * if both hold, it collapses to `span{I, E, F, EF}`.
pub fn check_two_idem(e: &Mat, f: &Mat) -> Result<Report, Error> {
    let pair = validate_pair(e, f)?;
    if !pair.order.is_comparable() {
        return Err(Error::domain(
            "the two-idempotent check requires EF >= FE or EF <= FE; the pair is incomparable",
        ));
    }
    let n = e.rows();
    let strictly_positive = null_ideal(e)?.is_empty();
    let full_range = range_ideal(e)?.is_full();
    let gens = [e.clone(), f.clone()];
    let alg = algebra_closure(n, &gens, true)?;

    let mut report = Report::new("two_idem");
    report.set("order", pair.order.as_str());
    report.set("strictly_positive", strictly_positive);
    report.set("full_range", full_range);
    report.dim = Some(alg.dim());

    let span_rank = |words: &[Word]| -> Result<usize, Error> {
        let mut span = SpanBuilder::new(n * n);
        for w in words {
            span.insert(&w.evaluate(n, &gens)?.vectorize());
        }
        Ok(span.rank())
    };
    if strictly_positive || full_range {
        let six = vec![
            Word::identity(),
            Word(vec![0]),
            Word(vec![1]),
            Word(vec![0, 1]),
            Word(vec![1, 0]),
            Word(vec![1, 0, 1]),
        ];
        report.assert_that(
            "algebra = span{I, E, F, EF, FE, FEF}",
            span_rank(&six)? == alg.dim(),
        );
    }
    if strictly_positive && full_range {
        let four = vec![
            Word::identity(),
            Word(vec![0]),
            Word(vec![1]),
            Word(vec![0, 1]),
        ];
        report.assert_that(
            "algebra = span{I, E, F, EF}",
            span_rank(&four)? == alg.dim(),
        );
    }
    if !(strictly_positive || full_range) {
        report.set("note", "neither hypothesis holds; nothing to assert");
    }
    Ok(report)
}

/// Dimension bound for a unital algebra generated by two matrices whose
/// minimal polynomials have degree at most two: `2n` when `n` is even,
/// `2n - 1` when `n` is odd.
pub fn quadratic_bound_check(e: &Mat, f: &Mat) -> Result<Report, Error> {
    e.require_square("quadratic bound")?;
    if e.shape() != f.shape() {
        return Err(Error::shape("the two matrices must have the same size"));
    }
    for (m, name) in [(e, "first"), (f, "second")] {
        let deg = minimal_poly(m)?.degree().unwrap_or(0);
        if deg > 2 {
            return Err(Error::domain(format!(
                "{name} matrix has minimal polynomial of degree {deg}, need <= 2"
            )));
        }
    }
    let n = e.rows();
    let bound = if n % 2 == 0 { 2 * n } else { 2 * n - 1 };
    let alg = algebra_closure(n, &[e.clone(), f.clone()], true)?;
    let mut report = Report::new("quadratic_bound");
    report.dim = Some(alg.dim());
    report.set("bound", bound);
    report.set("n", n);
    report.assert_that("dimension within bound", alg.dim() <= bound);
    Ok(report)
}

/// Built-in example pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleName {
    /// The 7x7 ideal-triangularizable pair attaining algebra dimension 9.
    Ks7,
    /// The 7x7 pair with the last row and column deleted; a band pair
    /// attaining algebra dimension 7.
    Ks6,
    /// The 2x2 pair generating all of M_2.
    N2,
    /// Block pair of size `n = 2k` with algebra dimension `4k = 2n`.
    Even(usize),
    /// Bordered block pair of size `n = 2k + 1` with dimension `4k + 1 = 2n - 1`.
    Odd(usize),
    /// Rank-one idempotent `u v^T / (v^T u)` paired with itself.
    RankOne(Vec<Rat>, Vec<Rat>),
}

/// The full-cycle permutation matrix: `P e_i = e_{i+1}` cyclically.
fn cycle_permutation(k: usize) -> Mat {
    Mat::from_fn(k, k, |r, c| if r == (c + 1) % k { rat(1) } else { rat(0) })
}

fn ks7_pair() -> (Mat, Mat) {
    let e = Mat::from_int_rows(&[
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 0],
    ]);
    let f = Mat::from_int_rows(&[
        vec![0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 1, 1],
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0],
    ]);
    (e, f)
}

/// Removes the last row and column.
fn truncate(m: &Mat) -> Mat {
    let keep: Vec<usize> = (0..m.rows() - 1).collect();
    m.submatrix(&keep, &keep).expect("truncation indices valid")
}

fn block_pair_even(k: usize) -> (Mat, Mat) {
    let n = 2 * k;
    let p = cycle_permutation(k);
    let e = Mat::from_fn(n, n, |r, c| {
        if r < k && c < k {
            if r == c {
                rat(1)
            } else {
                rat(0)
            }
        } else if r < k && c >= k {
            if r == c - k {
                rat(2)
            } else {
                rat(0)
            }
        } else {
            rat(0)
        }
    });
    let f = Mat::from_fn(n, n, |r, c| {
        if r < k && c < k {
            if r == c {
                rat(1)
            } else {
                rat(0)
            }
        } else if r >= k && c < k {
            p.at(r - k, c).clone()
        } else {
            rat(0)
        }
    });
    (e, f)
}

/// Builds the exact matrices of a named example pair.
pub fn build_example(name: &ExampleName) -> Result<(Mat, Mat), Error> {
    match name {
        ExampleName::Ks7 => Ok(ks7_pair()),
        ExampleName::Ks6 => {
            let (e, f) = ks7_pair();
            Ok((truncate(&e), truncate(&f)))
        }
        ExampleName::N2 => Ok((
            Mat::from_int_rows(&[vec![1, 1], vec![0, 0]]),
            Mat::from_int_rows(&[vec![1, 0], vec![1, 0]]),
        )),
        ExampleName::Even(k) => {
            if *k < 1 {
                return Err(Error::domain("even(k) needs k >= 1"));
            }
            if *k == 1 {
                return build_example(&ExampleName::N2);
            }
            Ok(block_pair_even(*k))
        }
        ExampleName::Odd(k) => {
            if *k < 1 {
                return Err(Error::domain("odd(k) needs k >= 1"));
            }
            let (e, f) = build_example(&ExampleName::Even(*k))?;
            let n = e.rows() + 1;
            let border = |inner: &Mat, corner: i64| {
                Mat::from_fn(n, n, |r, c| {
                    if r == 0 && c == 0 {
                        rat(corner)
                    } else if r == 0 || c == 0 {
                        rat(0)
                    } else {
                        inner.at(r - 1, c - 1).clone()
                    }
                })
            };
            Ok((border(&e, 1), border(&f, 0)))
        }
        ExampleName::RankOne(u, v) => {
            let e = rank_one_idempotent(u, v)?;
            Ok((e.clone(), e))
        }
    }
}

/// The rank-one idempotent `u v^T / (v^T u)`; requires `v^T u > 0` and
/// nonnegative data.
pub fn rank_one_idempotent(u: &[Rat], v: &[Rat]) -> Result<Mat, Error> {
    if u.len() != v.len() || u.is_empty() {
        return Err(Error::domain(
            "u and v must be nonempty vectors of equal length",
        ));
    }
    if u.iter().chain(v.iter()).any(|x| *x < Rat::zero()) {
        return Err(Error::domain("u and v must be nonnegative"));
    }
    let dot: Rat = u.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
    if dot <= Rat::zero() {
        return Err(Error::domain("v^T u must be positive"));
    }
    let n = u.len();
    Ok(Mat::from_fn(n, n, |r, c| &(&u[r] * &v[c]) / &dot))
}

/// Builds `C = E - F` for the even example and checks that the `4k`
/// matrices `C^{2j}, C^{2j+1}, C^{2j}E, C^{2j+1}E` (`j = 1..k`) are
/// linearly independent, together with the closed form
/// `C^{2j} = diag((-2P)^j, (-2P)^j)`. Since `C^{2k} = (-2)^k I`, the
/// identity already lies in their span.
pub fn independence_system_check(k: usize) -> Result<Report, Error> {
    if k < 2 {
        return Err(Error::domain("the independence system needs k >= 2"));
    }
    let (e, f) = build_example(&ExampleName::Even(k))?;
    let n = 2 * k;
    let c = e.checked_sub(&f)?;
    let p = cycle_permutation(k);

    let mut report = Report::new("independence_system");
    report.set("k", k);
    report.set("n", n);

    let mut family: Vec<Mat> = Vec::with_capacity(4 * k);
    let mut closed_forms_ok = true;
    for j in 1..=k {
        let c2j = c.pow(2 * j)?;
        let c2j1 = c.pow(2 * j + 1)?;
        // Closed form: C^{2j} = diag((-2P)^j, (-2P)^j).
        let m2pj = p.pow(j)?.scale(&rat(-2).pow_int(j));
        let expected = Mat::from_fn(n, n, |r, c| {
            if r < k && c < k {
                m2pj.at(r, c).clone()
            } else if r >= k && c >= k {
                m2pj.at(r - k, c - k).clone()
            } else {
                rat(0)
            }
        });
        closed_forms_ok &= c2j == expected;
        family.push(c2j.clone());
        family.push(c2j1.clone());
        family.push(c2j.checked_mul(&e)?);
        family.push(c2j1.checked_mul(&e)?);
    }
    report.assert_that(
        "closed form C^{2j} = diag((-2P)^j, (-2P)^j)",
        closed_forms_ok,
    );

    let mut span = SpanBuilder::new(n * n);
    for m in &family {
        span.insert(&m.vectorize());
    }
    report.set("family_size", family.len());
    report.set("rank", span.rank());
    report.assert_that("4k matrices independent", span.rank() == 4 * k);
    // C^{2k} = (-2)^k I, so inserting the identity cannot enlarge the span.
    let in_span_before = span.contains(&Mat::identity(n).vectorize());
    if let Inserted::Added { .. } = span.insert(&Mat::identity(n).vectorize()) {
        report.assert_that("identity already in span", false);
    } else {
        report.assert_that("identity already in span", in_span_before);
    }
    Ok(report)
}

trait PowInt {
    fn pow_int(&self, e: usize) -> Self;
}

impl PowInt for Rat {
    fn pow_int(&self, e: usize) -> Rat {
        let mut acc = rat(1);
        for _ in 0..e {
            acc *= self.clone();
        }
        acc
    }
}
