//! Algebra generation by word closure, membership certificates, the
//! trace-form radical, and the triangularizability test.
//!
//! The closure is breadth-first by word length with generators taken in
//! input order, so the word certificate attached to each basis element is
//! deterministic and as short as possible for that order. Products that
//! do not enlarge the span are discarded on the spot.

use num_traits::Zero;

use crate::report::Report;
use crate::span::{nullspace, Inserted, SpanBuilder};
use crate::{Error, Mat, Rat};

/// A product of generators, stored as generator indices; the empty word
/// is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn append(&self, g: usize) -> Self {
        let mut letters = self.0.clone();
        letters.push(g);
        Word(letters)
    }

    /// Evaluates the word on generators of size `n`; the identity word
    /// evaluates to the identity matrix.
    pub fn evaluate(&self, n: usize, generators: &[Mat]) -> Result<Mat, Error> {
        let mut acc = Mat::identity(n);
        for &g in &self.0 {
            let gen = generators.get(g).ok_or_else(|| {
                Error::domain(format!(
                    "word refers to generator {g}, but only {} exist",
                    generators.len()
                ))
            })?;
            acc = acc.checked_mul(gen)?;
        }
        Ok(acc)
    }

    /// Serializes over generator names, e.g. `"EFFE"`; the identity word
    /// is `"1"`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|&g| names[g].as_str()).collect()
    }
}

/// Default generator names `A`, `B`, `C`, ... used when the caller does
/// not supply any.
pub fn default_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| {
            let letter = char::from(b'A' + (i % 26) as u8);
            if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            }
        })
        .collect()
}

/// A basis of a matrix algebra together with the generating words that
/// produced each basis element.
pub struct AlgebraBasis {
    pub n: usize,
    pub generators: Vec<Mat>,
    pub unital: bool,
    pub basis: Vec<Mat>,
    pub words: Vec<Word>,
    span: SpanBuilder<Rat>,
}

impl AlgebraBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Breadth-first word closure of the (unital) algebra generated by square
/// matrices of size `n`. Terminates because the dimension is at most
/// `n^2`.
pub fn algebra_closure(n: usize, generators: &[Mat], unital: bool) -> Result<AlgebraBasis, Error> {
    if n == 0 {
        return Err(Error::shape("ambient size must be positive"));
    }
    for g in generators {
        if g.shape() != (n, n) {
            return Err(Error::shape(format!(
                "generator is {}x{}, expected {n}x{n}",
                g.rows(),
                g.cols()
            )));
        }
    }
    let mut span = SpanBuilder::new(n * n);
    let mut basis: Vec<Mat> = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    let try_insert = |span: &mut SpanBuilder<Rat>,
                      basis: &mut Vec<Mat>,
                      words: &mut Vec<Word>,
                      m: Mat,
                      w: Word| {
        if let Inserted::Added { .. } = span.insert(&m.vectorize()) {
            basis.push(m);
            words.push(w);
        }
    };

    if unital {
        try_insert(
            &mut span,
            &mut basis,
            &mut words,
            Mat::identity(n),
            Word::identity(),
        );
    }
    for (g, gen) in generators.iter().enumerate() {
        try_insert(
            &mut span,
            &mut basis,
            &mut words,
            gen.clone(),
            Word(vec![g]),
        );
    }

    // Right-multiplying the current basis by single generators reaches
    // every word; newly accepted products are queued in insertion order,
    // which keeps the scan breadth-first by word length.
    let mut next = 0;
    while next < basis.len() {
        for (g, gen) in generators.iter().enumerate() {
            let product = basis[next].checked_mul(gen)?;
            let word = words[next].append(g);
            try_insert(&mut span, &mut basis, &mut words, product, word);
        }
        next += 1;
    }

    Ok(AlgebraBasis {
        n,
        generators: generators.to_vec(),
        unital,
        basis,
        words,
        span,
    })
}

/// Exact coordinates of `m` in the algebra basis, or `None` if `m` is
/// outside the span.
pub fn membership(m: &Mat, alg: &AlgebraBasis) -> Result<Option<Vec<Rat>>, Error> {
    if m.shape() != (alg.n, alg.n) {
        return Err(Error::shape(format!(
            "matrix is {}x{}, algebra lives in {}x{}",
            m.rows(),
            m.cols(),
            alg.n,
            alg.n
        )));
    }
    Ok(alg.span.coordinates(&m.vectorize()))
}

/// Basis of the Jacobson radical of a multiplicatively closed span, via
/// the trace bilinear form: in characteristic zero the radical is the
/// null space of the Gram matrix `G[i][j] = trace(b_i b_j)` mapped back
/// through the algebra basis.
pub fn trace_radical(alg: &AlgebraBasis) -> Result<Vec<Mat>, Error> {
    let k = alg.basis.len();
    let mut gram: Vec<Vec<Rat>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(alg.basis[i].checked_mul(&alg.basis[j])?.trace()?);
        }
        gram.push(row);
    }
    let kernel = nullspace(&gram, k);
    let mut radical = Vec::with_capacity(kernel.len());
    for coeffs in kernel {
        let mut acc = Mat::zeros(alg.n, alg.n);
        for (c, b) in coeffs.iter().zip(alg.basis.iter()) {
            if !c.is_zero() {
                acc = acc.checked_add(&b.scale(c))?;
            }
        }
        radical.push(acc);
    }
    Ok(radical)
}

/// Decides simultaneous triangularizability (over the algebraic closure)
/// of the unital algebra generated by the given matrices: the algebra is
/// triangularizable iff every commutator of basis elements lies in the
/// radical. Both the radical and the membership tests are rational, so
/// the verdict is exact.
pub fn is_triangularizable(n: usize, generators: &[Mat]) -> Result<Report, Error> {
    let alg = algebra_closure(n, generators, true)?;
    let radical = trace_radical(&alg)?;
    let mut rad_span = SpanBuilder::new(n * n);
    for r in &radical {
        rad_span.insert(&r.vectorize());
    }

    let mut report = Report::new("triangularizable");
    report.dim = Some(alg.dim());
    report.radical_dim = Some(rad_span.rank());
    let names = default_names(generators.len());
    'outer: for i in 0..alg.basis.len() {
        for j in (i + 1)..alg.basis.len() {
            let comm = alg.basis[i].commutator(&alg.basis[j])?;
            if !rad_span.contains(&comm.vectorize()) {
                report.fail(format!(
                    "[{}, {}] is outside the radical",
                    alg.words[i].to_string_with(&names),
                    alg.words[j].to_string_with(&names)
                ));
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// Checks that the span of the evaluated words equals the full unital
/// algebra generated by the same matrices; reports both dimensions.
pub fn spanning_word_check(n: usize, generators: &[Mat], words: &[Word]) -> Result<Report, Error> {
    let mut word_span = SpanBuilder::new(n * n);
    for w in words {
        let m = w.evaluate(n, generators)?;
        word_span.insert(&m.vectorize());
    }
    let alg = algebra_closure(n, generators, true)?;
    let mut report = Report::new("spanning_words");
    report.dim = Some(alg.dim());
    report.set("word_span_dim", word_span.rank());
    report.set("word_count", words.len());
    if word_span.rank() != alg.dim() {
        report.fail(format!(
            "word span has dimension {}, algebra has dimension {}",
            word_span.rank(),
            alg.dim()
        ));
    }
    Ok(report)
}
