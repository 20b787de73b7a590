//! The fixed reproduction suite: every built-in claim with an exactly
//! computable value, one row per claim. An all-pass run is the
//! repository's primary acceptance gate.

use serde::Serialize;
use serde_json::{json, Value};

use crate::idempot::{band_semigroup, build_example, validate_pair, CommOrder, ExampleName};
use crate::lattice::band_split;
use crate::span::SpanBuilder;
use crate::spanalg::{algebra_closure, is_triangularizable};
use crate::supercone::{cone_span, supercomm_spec, Side};
use crate::{rat, Error, Mat};

/// One reproduced claim: expected against computed, exact equality.
#[derive(Clone, Debug, Serialize)]
pub struct ReproRow {
    pub claim_id: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub source: String,
}

impl ReproRow {
    fn new(claim_id: &str, expected: Value, computed: Value, source: &str) -> Self {
        let pass = expected == computed;
        ReproRow {
            claim_id: claim_id.to_string(),
            expected,
            computed,
            pass,
            source: source.to_string(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("row serializes")
    }
}

fn unital_dim(n: usize, gens: &[Mat]) -> Result<usize, Error> {
    Ok(algebra_closure(n, gens, true)?.dim())
}

/// Runs the full fixed suite. Individual failures become rows with
/// `pass = false`; only internal errors abort.
pub fn repro_all() -> Result<Vec<ReproRow>, Error> {
    let mut rows = Vec::new();

    // The printed 7x7 pair.
    let (e7, f7) = build_example(&ExampleName::Ks7)?;
    let pair7 = validate_pair(&e7, &f7)?;
    rows.push(ReproRow::new(
        "ks7_order",
        json!(true),
        json!(pair7.order == CommOrder::GreaterEqual),
        "the printed 7x7 idempotent pair satisfies EF >= FE entrywise",
    ));
    let mut nine_span = SpanBuilder::new(49);
    for w in crate::idempot::nine_words() {
        nine_span.insert(&w.evaluate(7, &[e7.clone(), f7.clone()])?.vectorize());
    }
    rows.push(ReproRow::new(
        "ks7_nine_words_rank",
        json!(9),
        json!(nine_span.rank()),
        "the nine canonical words of the 7x7 pair are linearly independent",
    ));
    rows.push(ReproRow::new(
        "ks7_dim",
        json!(9),
        json!(unital_dim(7, &[e7.clone(), f7.clone()])?),
        "the unital algebra of the 7x7 pair attains the maximal dimension 9",
    ));

    // The 6x6 truncation.
    let (e6, f6) = build_example(&ExampleName::Ks6)?;
    rows.push(ReproRow::new(
        "ks6_dim",
        json!(7),
        json!(unital_dim(6, &[e6.clone(), f6.clone()])?),
        "deleting the last row and column yields a pair of algebra dimension exactly 7",
    ));
    let pair6 = validate_pair(&e6, &f6)?;
    let band6 = band_semigroup(&pair6)?;
    rows.push(ReproRow::new(
        "ks6_semigroup",
        json!(true),
        json!(
            band6.details.get("semigroup_is_six_products") == Some(&json!(true))
                && band6.details.get("semigroup_size") == Some(&json!(6))
        ),
        "the truncated pair's semigroup stabilizes at the six canonical products",
    ));

    // The 2x2 pair.
    let (e2, f2) = build_example(&ExampleName::N2)?;
    rows.push(ReproRow::new(
        "n2_dim",
        json!(4),
        json!(unital_dim(2, &[e2, f2])?),
        "the 2x2 idempotent pair generates the full matrix algebra",
    ));

    // Even and odd block families.
    for k in 1..=4usize {
        let (e, f) = build_example(&ExampleName::Even(k))?;
        rows.push(ReproRow::new(
            &format!("even_k{k}_dim"),
            json!(4 * k),
            json!(unital_dim(2 * k, &[e, f])?),
            "the even block pair of size n = 2k spans an algebra of dimension 2n = 4k",
        ));
    }
    for k in 1..=4usize {
        let (e, f) = build_example(&ExampleName::Odd(k))?;
        rows.push(ReproRow::new(
            &format!("odd_k{k}_dim"),
            json!(4 * k + 1),
            json!(unital_dim(2 * k + 1, &[e, f])?),
            "the bordered odd pair of size n = 2k+1 spans an algebra of dimension 2n-1 = 4k+1",
        ));
    }

    // Super left-commutant spans: strictly decreasing diagonal.
    for n in 2..=6usize {
        let diag: Vec<_> = (0..n).map(|i| rat((n - i) as i64)).collect();
        let spec = supercomm_spec(&Mat::diagonal(&diag), Side::Left)?;
        let span = cone_span(&spec)?;
        rows.push(ReproRow::new(
            &format!("ut_span_n{n}"),
            json!(n * (n + 1) / 2),
            json!(span.dim),
            "the super left-commutant of diag(n..1) spans the upper triangular algebra",
        ));
    }

    // Super left-commutant spans: the all-ones matrix (doubly stochastic
    // multiples).
    for n in 2..=5usize {
        let spec = supercomm_spec(&Mat::from_fn(n, n, |_, _| rat(1)), Side::Left)?;
        let span = cone_span(&spec)?;
        rows.push(ReproRow::new(
            &format!("ds_span_n{n}"),
            json!((n - 1) * (n - 1) + 1),
            json!(span.dim),
            "the super left-commutant of the all-ones matrix spans the doubly stochastic span",
        ));
        if n >= 3 {
            let tri = is_triangularizable(n, &span.span_basis)?;
            rows.push(ReproRow::new(
                &format!("ds_notri_n{n}"),
                json!(false),
                json!(tri.pass),
                "the doubly stochastic span algebra is not triangularizable for n >= 3",
            ));
        }
    }

    // Band-split self-checks on the printed idempotents.
    for (m, tag) in [(&e7, "E"), (&f7, "F")] {
        let ok = band_split(m).is_ok();
        rows.push(ReproRow::new(
            &format!("bandsplit_ks7_{tag}"),
            json!(true),
            json!(ok),
            "the four-band block identities hold for the printed 7x7 idempotents",
        ));
    }

    Ok(rows)
}
