//! Built-in named relation sets and fixture algebras.
//!
//! The relation entries are transcribed directly from their defining
//! identities and are never generated by the engines; the test suites
//! compare engine output against them, so the catalog doubles as a golden
//! reference. Fixture algebras are small rank-2 examples separating the
//! dendriform categories from each other.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::fd::FDAlgebra;
use crate::rational::{q, Q};
use crate::term::{OpSymbol, Relation, RelationSet, Signature, Symmetry, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("entry `{0}` is not a relation set")]
    NotRelations(String),
    #[error("entry `{0}` is not an algebra")]
    NotAlgebra(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Category,
    Dendriform,
    Polarized,
    PolarizedDendriform,
    Tridendriform,
    FixtureAlgebra,
}

impl EntryKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryKind::Category => "category",
            EntryKind::Dendriform => "dendriform",
            EntryKind::Polarized => "polarized",
            EntryKind::PolarizedDendriform => "polarized-dendriform",
            EntryKind::Tridendriform => "tridendriform",
            EntryKind::FixtureAlgebra => "fixture-algebra",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Payload {
    Relations(RelationSet),
    Algebra(FDAlgebra),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub payload: Payload,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn relations(&self) -> Result<&RelationSet, CatalogError> {
        match &self.payload {
            Payload::Relations(r) => Ok(r),
            Payload::Algebra(_) => Err(CatalogError::NotRelations(self.name.clone())),
        }
    }

    pub fn algebra(&self) -> Result<&FDAlgebra, CatalogError> {
        match &self.payload {
            Payload::Algebra(a) => Ok(a),
            Payload::Relations(_) => Err(CatalogError::NotAlgebra(self.name.clone())),
        }
    }
}

fn lf(s: &str) -> Tree {
    Tree::leaf(s)
}

fn t(op: &str, l: Tree, r: Tree) -> Tree {
    Tree::node(op, l, r)
}

fn rel(sig: &Signature, terms: Vec<(i64, Tree)>) -> Relation {
    Relation::new(sig, terms.into_iter().map(|(c, tree)| (q(c), tree)).collect())
        .expect("catalog relation is well-formed")
}

fn relset(name: &str, sig: Signature, rels: Vec<Relation>) -> RelationSet {
    RelationSet::new(name, sig, rels).expect("catalog set is well-formed")
}

fn entry_rels(name: &str, kind: EntryKind, provenance: &str, rels: RelationSet) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        kind,
        payload: Payload::Relations(rels),
        provenance: provenance.to_string(),
    }
}

fn entry_alg(name: &str, provenance: &str, alg: FDAlgebra) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        kind: EntryKind::FixtureAlgebra,
        payload: Payload::Algebra(alg),
        provenance: provenance.to_string(),
    }
}

fn categories() -> Vec<CatalogEntry> {
    let sig = Signature::single_plain();
    let m = |l, r| t("mu", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");

    let associative = rel(&sig, vec![(1, m(m(a(), b()), c())), (-1, m(a(), m(b(), c())))]);

    let pre_lie = rel(
        &sig,
        vec![
            (1, m(m(a(), b()), c())),
            (-1, m(a(), m(b(), c()))),
            (-1, m(m(b(), a()), c())),
            (1, m(b(), m(a(), c()))),
        ],
    );

    let a3 = rel(
        &sig,
        vec![
            (1, m(m(a(), b()), c())),
            (1, m(m(b(), c()), a())),
            (1, m(m(c(), a()), b())),
            (-1, m(a(), m(b(), c()))),
            (-1, m(b(), m(c(), a()))),
            (-1, m(c(), m(a(), b()))),
        ],
    );

    // Sum over cyclic permutations of associator(x,y,z) - associator(y,x,z).
    let la = rel(
        &sig,
        vec![
            (1, m(m(a(), b()), c())),
            (-1, m(a(), m(b(), c()))),
            (-1, m(m(b(), a()), c())),
            (1, m(b(), m(a(), c()))),
            (1, m(m(b(), c()), a())),
            (-1, m(b(), m(c(), a()))),
            (-1, m(m(c(), b()), a())),
            (1, m(c(), m(b(), a()))),
            (1, m(m(c(), a()), b())),
            (-1, m(c(), m(a(), b()))),
            (-1, m(m(a(), c()), b())),
            (1, m(a(), m(c(), b()))),
        ],
    );

    // The anticommutator is associative.
    let aa = rel(
        &sig,
        vec![
            (1, m(m(a(), b()), c())),
            (1, m(m(b(), a()), c())),
            (1, m(c(), m(a(), b()))),
            (1, m(c(), m(b(), a()))),
            (-1, m(a(), m(b(), c()))),
            (-1, m(a(), m(c(), b()))),
            (-1, m(m(b(), c()), a())),
            (-1, m(m(c(), b()), a())),
        ],
    );

    let p_algebra = rel(
        &sig,
        vec![
            (3, m(m(a(), b()), c())),
            (-3, m(a(), m(b(), c()))),
            (-1, m(m(a(), c()), b())),
            (-1, m(m(b(), c()), a())),
            (1, m(m(b(), a()), c())),
            (1, m(m(c(), a()), b())),
        ],
    );

    vec![
        entry_rels(
            "associative",
            EntryKind::Category,
            "associativity",
            relset("associative", sig.clone(), vec![associative]),
        ),
        entry_rels(
            "pre-lie",
            EntryKind::Category,
            "left pre-Lie identity (associator symmetric in the first two arguments)",
            relset("pre-lie", sig.clone(), vec![pre_lie]),
        ),
        entry_rels(
            "a3",
            EntryKind::Category,
            "cyclic associativity (Goze-Remm A3-associative algebras)",
            relset("a3", sig.clone(), vec![a3]),
        ),
        entry_rels(
            "la",
            EntryKind::Category,
            "Lie-admissibility: the commutator satisfies Jacobi",
            relset("la", sig.clone(), vec![la]),
        ),
        entry_rels(
            "aa",
            EntryKind::Category,
            "associative-admissibility: the anticommutator is associative",
            relset("aa", sig.clone(), vec![aa]),
        ),
        entry_rels(
            "p-algebra",
            EntryKind::Category,
            "the one-product form of the Poisson axioms (Markl-Remm)",
            relset("p-algebra", sig, vec![p_algebra]),
        ),
    ]
}

fn dendriform_entries() -> Vec<CatalogEntry> {
    let sig = Signature::dendriform();
    let p = |l, r| t("prec", l, r);
    let s = |l, r| t("succ", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");

    let dend1 = rel(
        &sig,
        vec![
            (1, p(p(a(), b()), c())),
            (-1, p(a(), p(b(), c()))),
            (-1, p(a(), s(b(), c()))),
        ],
    );
    let dend2 = rel(&sig, vec![(1, p(s(a(), b()), c())), (-1, s(a(), p(b(), c())))]);
    let dend3 = rel(
        &sig,
        vec![
            (1, s(p(a(), b()), c())),
            (1, s(s(a(), b()), c())),
            (-1, s(a(), s(b(), c()))),
        ],
    );

    let l1 = rel(
        &sig,
        vec![
            (1, s(p(a(), b()), c())),
            (1, s(s(a(), b()), c())),
            (-1, s(a(), s(b(), c()))),
            (-1, s(p(b(), a()), c())),
            (-1, s(s(b(), a()), c())),
            (1, s(b(), s(a(), c()))),
        ],
    );
    let l2 = rel(
        &sig,
        vec![
            (1, p(s(a(), b()), c())),
            (-1, s(a(), p(b(), c()))),
            (-1, p(p(b(), a()), c())),
            (1, p(b(), p(a(), c()))),
            (1, p(b(), s(a(), c()))),
        ],
    );

    let a3d = rel(
        &sig,
        vec![
            (1, s(a(), s(b(), c()))),
            (-1, p(p(c(), a()), b())),
            (1, p(c(), p(a(), b()))),
            (1, p(c(), s(a(), b()))),
            (-1, s(p(a(), b()), c())),
            (-1, s(s(a(), b()), c())),
            (1, s(b(), p(c(), a()))),
            (-1, p(s(b(), c()), a())),
        ],
    );

    let lad = rel(
        &sig,
        vec![
            (1, s(a(), s(b(), c()))),
            (-1, s(a(), p(c(), b()))),
            (-1, p(s(b(), c()), a())),
            (1, p(p(c(), b()), a())),
            (-1, s(b(), s(a(), c()))),
            (1, s(b(), p(c(), a()))),
            (1, p(s(a(), c()), b())),
            (-1, p(p(c(), a()), b())),
            (1, p(c(), p(a(), b()))),
            (1, p(c(), s(a(), b()))),
            (-1, p(c(), p(b(), a()))),
            (-1, p(c(), s(b(), a()))),
            (-1, s(p(a(), b()), c())),
            (-1, s(s(a(), b()), c())),
            (1, s(p(b(), a()), c())),
            (1, s(s(b(), a()), c())),
        ],
    );

    // Zinbiel for a*b := a succ b + b prec a, expanded.
    let aad = rel(
        &sig,
        vec![
            (1, s(s(a(), b()), c())),
            (1, s(p(b(), a()), c())),
            (1, s(s(b(), a()), c())),
            (1, s(p(a(), b()), c())),
            (1, p(c(), s(a(), b()))),
            (1, p(c(), p(b(), a()))),
            (1, p(c(), s(b(), a()))),
            (1, p(c(), p(a(), b()))),
            (-1, s(a(), s(b(), c()))),
            (-1, s(a(), p(c(), b()))),
            (-1, p(s(b(), c()), a())),
            (-1, p(p(c(), b()), a())),
        ],
    );

    let pd1 = rel(
        &sig,
        vec![
            (3, s(p(a(), b()), c())),
            (3, s(s(a(), b()), c())),
            (-3, s(a(), s(b(), c()))),
            (-1, p(s(a(), c()), b())),
            (-1, p(s(b(), c()), a())),
            (1, s(p(b(), a()), c())),
            (1, s(s(b(), a()), c())),
            (1, p(p(c(), a()), b())),
        ],
    );
    let pd3 = rel(
        &sig,
        vec![
            (3, p(s(a(), b()), c())),
            (-3, s(a(), p(b(), c()))),
            (-1, s(p(a(), c()), b())),
            (-1, s(s(a(), c()), b())),
            (-1, p(p(b(), c()), a())),
            (1, p(p(b(), a()), c())),
            (1, s(p(c(), a()), b())),
            (1, s(s(c(), a()), b())),
        ],
    );
    let pd2 = rel(
        &sig,
        vec![
            (3, p(p(a(), b()), c())),
            (-3, p(a(), p(b(), c()))),
            (-3, p(a(), s(b(), c()))),
            (-1, p(p(a(), c()), b())),
            (-1, s(p(b(), c()), a())),
            (-1, s(s(b(), c()), a())),
            (1, p(s(b(), a()), c())),
            (1, p(s(c(), a()), b())),
        ],
    );

    let inner = rel(&sig, vec![(1, p(s(a(), b()), c())), (-1, s(a(), p(b(), c())))]);

    vec![
        entry_rels(
            "loday-dendriform",
            EntryKind::Dendriform,
            "Loday's dendriform axioms",
            relset("loday-dendriform", sig.clone(), vec![dend1, dend2, dend3]),
        ),
        entry_rels(
            "l-dendriform",
            EntryKind::Dendriform,
            "L-dendriform axioms (Bai-Liu-Ni), the dendriform companions of pre-Lie algebras",
            relset("l-dendriform", sig.clone(), vec![l1, l2]),
        ),
        entry_rels(
            "a3-dendriform",
            EntryKind::Dendriform,
            "the single dendriform companion relation of cyclic associativity",
            relset("a3-dendriform", sig.clone(), vec![a3d]),
        ),
        entry_rels(
            "la-dendriform",
            EntryKind::Dendriform,
            "the single dendriform companion relation of Lie-admissibility",
            relset("la-dendriform", sig.clone(), vec![lad]),
        ),
        entry_rels(
            "aa-dendriform",
            EntryKind::Dendriform,
            "Zinbiel identity for a*b = a succ b + b prec a",
            relset("aa-dendriform", sig.clone(), vec![aad]),
        ),
        entry_rels(
            "p-dendriform",
            EntryKind::Dendriform,
            "the three dendriform companion relations of the P-algebra identity",
            relset("p-dendriform", sig.clone(), vec![pd1, pd3, pd2]),
        ),
        entry_rels(
            "inner-associativity",
            EntryKind::Dendriform,
            "inner associativity (a succ b) prec c = a succ (b prec c)",
            relset("inner-associativity", sig, vec![inner]),
        ),
    ]
}

fn polarized_entries() -> Vec<CatalogEntry> {
    let sig = Signature::polarized();
    let d = |l, r| t("dot", l, r);
    let br = |l, r| t("br", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");

    let cat1 = rel(
        &sig,
        vec![
            (1, br(d(a(), b()), c())),
            (-1, d(a(), br(b(), c()))),
            (-1, d(br(a(), c()), b())),
        ],
    );
    let cat2 = rel(
        &sig,
        vec![
            (1, br(br(a(), b()), c())),
            (-1, d(d(b(), c()), a())),
            (1, d(d(c(), a()), b())),
        ],
    );

    let comm_assoc = rel(&sig, vec![(1, d(d(a(), b()), c())), (-1, d(a(), d(b(), c())))]);
    let derivation = cat1.clone();
    let jacobi = rel(
        &sig,
        vec![
            (1, br(br(a(), b()), c())),
            (1, br(br(b(), c()), a())),
            (1, br(br(c(), a()), b())),
        ],
    );

    vec![
        entry_rels(
            "polarized-associative",
            EntryKind::Polarized,
            "associativity written in symmetric/antisymmetric parts (Markl-Remm)",
            relset("polarized-associative", sig.clone(), vec![cat1, cat2]),
        ),
        entry_rels(
            "poisson",
            EntryKind::Polarized,
            "Poisson axioms: commutative associativity, biderivation, Jacobi",
            relset("poisson", sig, vec![comm_assoc, derivation, jacobi]),
        ),
    ]
}

fn polarized_dendriform_entries() -> Vec<CatalogEntry> {
    let sig = Signature::polarized_dendriform();
    let st = |l, r| t("star", l, r);
    let ci = |l, r| t("circ", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");

    let zinbiel = rel(
        &sig,
        vec![
            (1, st(a(), st(b(), c()))),
            (-1, st(st(a(), b()), c())),
            (-1, st(st(b(), a()), c())),
        ],
    );
    let p2 = rel(
        &sig,
        vec![
            (1, ci(st(a(), b()), c())),
            (1, ci(st(b(), a()), c())),
            (-1, st(a(), ci(b(), c()))),
            (-1, st(b(), ci(a(), c()))),
        ],
    );
    let p22 = rel(
        &sig,
        vec![
            (1, st(ci(a(), b()), c())),
            (-1, st(ci(b(), a()), c())),
            (-1, st(a(), ci(b(), c()))),
            (1, ci(b(), st(a(), c()))),
        ],
    );
    let p3 = rel(
        &sig,
        vec![
            (1, ci(ci(a(), b()), c())),
            (-1, ci(ci(b(), a()), c())),
            (-1, ci(a(), ci(b(), c()))),
            (1, ci(b(), ci(a(), c()))),
        ],
    );

    vec![entry_rels(
        "pre-poisson",
        EntryKind::PolarizedDendriform,
        "Aguiar's pre-Poisson axioms",
        relset("pre-poisson", sig, vec![zinbiel, p2, p22, p3]),
    )]
}

fn tridendriform_entries() -> Vec<CatalogEntry> {
    // Post-Poisson, over star/circ/bar/box.
    let sig = Signature::polarized_tridendriform();
    let st = |l, r| t("star", l, r);
    let ci = |l, r| t("circ", l, r);
    let ba = |l, r| t("bar", l, r);
    let bo = |l, r| t("box", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");

    let pp = vec![
        rel(
            &sig,
            vec![
                (1, st(a(), st(b(), c()))),
                (-1, st(st(a(), b()), c())),
                (-1, st(st(b(), a()), c())),
                (-1, st(ba(a(), b()), c())),
            ],
        ),
        rel(&sig, vec![(1, st(a(), ba(b(), c()))), (-1, ba(st(a(), b()), c()))]),
        rel(&sig, vec![(1, ba(a(), ba(b(), c()))), (-1, ba(ba(a(), b()), c()))]),
        rel(
            &sig,
            vec![
                (1, ci(a(), ci(b(), c()))),
                (-1, ci(b(), ci(a(), c()))),
                (-1, ci(ci(a(), b()), c())),
                (1, ci(ci(b(), a()), c())),
                (-1, ci(bo(a(), b()), c())),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, bo(ci(a(), b()), c())),
                (-1, ci(a(), bo(b(), c()))),
                (-1, bo(ci(a(), c()), b())),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, bo(bo(a(), b()), c())),
                (1, bo(bo(b(), c()), a())),
                (1, bo(bo(c(), a()), b())),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, st(a(), ci(b(), c()))),
                (1, st(b(), ci(a(), c()))),
                (-1, ci(st(a(), b()), c())),
                (-1, ci(st(b(), a()), c())),
                (-1, ci(ba(a(), b()), c())),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, st(a(), ci(b(), c()))),
                (-1, ci(b(), st(a(), c()))),
                (-1, st(ci(a(), b()), c())),
                (1, st(ci(b(), a()), c())),
                (-1, st(bo(a(), b()), c())),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, bo(st(a(), b()), c())),
                (-1, st(a(), bo(b(), c()))),
                (-1, ba(b(), ci(a(), c()))),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, ci(c(), ba(a(), b()))),
                (-1, ba(a(), ci(c(), b()))),
                (-1, ba(b(), ci(c(), a()))),
            ],
        ),
        rel(
            &sig,
            vec![
                (1, bo(ba(a(), b()), c())),
                (-1, ba(a(), bo(b(), c()))),
                (-1, ba(b(), bo(a(), c()))),
            ],
        ),
    ];

    // The two-slot tridendrification of cyclic associativity.
    let tsig = Signature::tridendriform();
    let p = |l, r| t("prec", l, r);
    let s = |l, r| t("succ", l, r);
    let dd = |l, r| t("dot", l, r);
    let a3_extra = rel(
        &tsig,
        vec![
            (1, p(dd(a(), b()), c())),
            (1, dd(p(b(), c()), a())),
            (1, dd(s(c(), a()), b())),
            (-1, dd(a(), p(b(), c()))),
            (-1, dd(b(), s(c(), a()))),
            (-1, s(c(), dd(a(), b()))),
        ],
    );

    // Post-Lie: a Lie bracket `dot` plus two compatibilities with `times`.
    let plsig = Signature::new(vec![
        OpSymbol::plain("times"),
        OpSymbol::new("dot", Symmetry::Anticommutative, 0).unwrap(),
    ])
    .unwrap();
    let x = |l, r| t("times", l, r);
    let dt = |l, r| t("dot", l, r);
    let pl_jacobi = rel(
        &plsig,
        vec![
            (1, dt(dt(a(), b()), c())),
            (1, dt(dt(b(), c()), a())),
            (1, dt(dt(c(), a()), b())),
        ],
    );
    let pl1 = rel(
        &plsig,
        vec![
            (1, x(dt(a(), b()), c())),
            (-1, x(a(), x(b(), c()))),
            (1, x(x(a(), b()), c())),
            (1, x(b(), x(a(), c()))),
            (-1, x(x(b(), a()), c())),
        ],
    );
    // c times (a dot b) = (c times a) dot b - (c times b) dot a: the bracket
    // is a derivation of the left multiplication.
    let pl2 = rel(
        &plsig,
        vec![
            (1, x(c(), dt(a(), b()))),
            (1, dt(x(c(), b()), a())),
            (-1, dt(x(c(), a()), b())),
        ],
    );

    vec![
        entry_rels(
            "post-poisson",
            EntryKind::Tridendriform,
            "post-Poisson axioms (Ni-Bai)",
            relset("post-poisson", sig, pp),
        ),
        entry_rels(
            "a3-tridendriform-extra",
            EntryKind::Tridendriform,
            "the two-slot tridendriform companion relation of cyclic associativity",
            relset("a3-tridendriform-extra", tsig, vec![a3_extra]),
        ),
        entry_rels(
            "post-lie",
            EntryKind::Tridendriform,
            "post-Lie axioms: a Lie bracket with two compatibility relations",
            relset("post-lie", plsig, vec![pl_jacobi, pl1, pl2]),
        ),
    ]
}

fn one_product_commutative_entries() -> Vec<CatalogEntry> {
    let sig = Signature::single_times();
    let x = |l, r| t("times", l, r);
    let a = || lf("a");
    let b = || lf("b");
    let c = || lf("c");
    let zinbiel = rel(
        &sig,
        vec![
            (1, x(a(), x(b(), c()))),
            (-1, x(x(a(), b()), c())),
            (-1, x(x(b(), a()), c())),
        ],
    );
    let nap = rel(&sig, vec![(1, x(c(), x(a(), b()))), (-1, x(a(), x(c(), b())))]);
    vec![entry_rels(
        "zinbiel-nap",
        EntryKind::Dendriform,
        "Zinbiel and NAP identities (commutative dendriform algebras in one-product form)",
        relset("zinbiel-nap", sig, vec![zinbiel, nap]),
    )]
}

fn fixture_entries() -> Vec<CatalogEntry> {
    let sig = Signature::dendriform();
    // Basis: e0 = a, e1 = b; unspecified products are zero.
    let rows: Vec<(&str, Vec<(&str, usize, usize, Vec<(Q, usize)>)>)> = vec![
        (
            "table2-row1",
            vec![
                ("prec", 0, 0, vec![(q(-1), 1)]),
                ("succ", 0, 0, vec![(q(1), 0), (q(1), 1)]),
                ("succ", 1, 0, vec![(q(1), 1)]),
            ],
        ),
        (
            "table2-row2",
            vec![
                ("prec", 0, 1, vec![(q(1), 1)]),
                ("succ", 1, 0, vec![(q(1), 1)]),
                ("succ", 1, 1, vec![(q(1), 1)]),
            ],
        ),
        ("table2-row3", vec![("succ", 1, 0, vec![(q(1), 0)])]),
        (
            "table2-row4",
            vec![("prec", 0, 1, vec![(q(-1), 0)]), ("succ", 1, 0, vec![(q(1), 0)])],
        ),
        ("table2-row5", vec![("prec", 0, 0, vec![(q(1), 0), (q(1), 1)])]),
    ];
    rows.into_iter()
        .map(|(name, products)| {
            let alg = FDAlgebra::from_products(2, sig.clone(), &products, None)
                .expect("fixture is well-formed");
            entry_alg(name, "rank-2 fixture separating the dendriform categories", alg)
        })
        .collect()
}

static CATALOG: Lazy<BTreeMap<String, CatalogEntry>> = Lazy::new(|| {
    let mut map = BTreeMap::new();
    for e in categories()
        .into_iter()
        .chain(dendriform_entries())
        .chain(polarized_entries())
        .chain(polarized_dendriform_entries())
        .chain(tridendriform_entries())
        .chain(one_product_commutative_entries())
        .chain(fixture_entries())
    {
        map.insert(e.name.clone(), e);
    }
    map
});

/// Looks up an entry by name.
pub fn get(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    CATALOG.get(name).ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

/// Registered names, sorted.
pub fn names() -> Vec<&'static str> {
    CATALOG.keys().map(|s| s.as_str()).collect()
}

/// Convenience: the relation set of a named entry.
pub fn relations(name: &str) -> Result<&'static RelationSet, CatalogError> {
    get(name)?.relations()
}

/// Convenience: the fixture algebra of a named entry.
pub fn algebra(name: &str) -> Result<&'static FDAlgebra, CatalogError> {
    get(name)?.algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::TransformRecipe;

    #[test]
    fn all_minimum_entries_are_registered() {
        for name in [
            "associative",
            "pre-lie",
            "a3",
            "la",
            "aa",
            "p-algebra",
            "loday-dendriform",
            "l-dendriform",
            "a3-dendriform",
            "la-dendriform",
            "aa-dendriform",
            "p-dendriform",
            "poisson",
            "pre-poisson",
            "post-poisson",
            "polarized-associative",
            "zinbiel-nap",
            "a3-tridendriform-extra",
            "post-lie",
            "table2-row1",
            "table2-row2",
            "table2-row3",
            "table2-row4",
            "table2-row5",
            "inner-associativity",
        ] {
            let e = get(name).unwrap();
            assert!(!e.provenance.is_empty());
        }
        assert!(get("nope").is_err());
    }

    #[test]
    fn post_poisson_has_eleven_relations() {
        assert_eq!(relations("post-poisson").unwrap().relations.len(), 11);
        assert_eq!(relations("pre-poisson").unwrap().relations.len(), 4);
    }

    #[test]
    fn stated_table_cells_hold() {
        // Row 1 is A3-dendriform but neither L- nor P-dendriform.
        let row1 = algebra("table2-row1").unwrap();
        assert!(row1.satisfies(relations("a3-dendriform").unwrap()).unwrap());
        assert!(!row1.satisfies(relations("l-dendriform").unwrap()).unwrap());
        assert!(!row1.satisfies(relations("p-dendriform").unwrap()).unwrap());
        // Row 3 is L-dendriform but not A3- or Loday-dendriform.
        let row3 = algebra("table2-row3").unwrap();
        assert!(row3.satisfies(relations("l-dendriform").unwrap()).unwrap());
        assert!(!row3.satisfies(relations("a3-dendriform").unwrap()).unwrap());
        assert!(!row3.satisfies(relations("loday-dendriform").unwrap()).unwrap());
    }

    #[test]
    fn row1_star_column_matches() {
        let star = algebra("table2-row1")
            .unwrap()
            .transform(&TransformRecipe::star_from_dendriform())
            .unwrap();
        assert_eq!(star.product("mu", &star.basis_vector(0), &star.basis_vector(0)), star.basis_vector(0));
        assert_eq!(star.product("mu", &star.basis_vector(1), &star.basis_vector(0)), star.basis_vector(1));
    }

    #[test]
    fn category_entries_are_trilinear() {
        for name in ["associative", "pre-lie", "a3", "la", "aa", "p-algebra"] {
            for r in &relations(name).unwrap().relations {
                assert_eq!(r.variables().len(), 3, "{name}");
                assert!(!r.is_zero(), "{name}");
            }
        }
    }
}
