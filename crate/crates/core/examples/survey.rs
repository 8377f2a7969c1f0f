//! Auslander-Gorenstein versus PU form over every J(q) with |q| ≤ 4 and
//! over bounded posets on three inner elements.

use coxlab::analysis::question_probe;
use coxlab::cli::corpus_spec;

fn main() {
    let mut corpus = corpus_spec("ideals:4", 0).unwrap();
    corpus.extend(corpus_spec("bounded:3", 0).unwrap());
    let report = question_probe(&corpus, 12).unwrap();
    for row in &report.rows {
        println!(
            "{:<14} {:>3} elements  AG {:<5} PU {:<5} permanent {:>6}",
            row.name,
            row.elements,
            row.auslander_gorenstein,
            row.pu_form_linext,
            row.permanent.as_deref().unwrap_or("-")
        );
    }
    println!(
        "{} posets, {} agree, counterexample candidates: {:?}",
        report.rows.len(),
        report.agreements,
        report.counterexamples
    );
}
