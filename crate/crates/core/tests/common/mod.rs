//! Brute-force oracles shared by the integration tests. They only use ring
//! addition and multiplication and never call the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ringlogic::finring::make_ring;
use ringlogic::fpring::{Diagram, DiagramArrow, DiagramObject};
use ringlogic::theory::Axiom;
use ringlogic::{Elem, FiniteRing, Poly, Presentation, PrimMorphism, Var};

pub fn ring(spec: &str) -> FiniteRing {
    make_ring(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `n * 1` by double-and-add.
pub fn int(r: &FiniteRing, n: &BigInt) -> Elem {
    let mut k = n.abs().to_u64().expect("small coefficient");
    let (mut acc, mut pow) = (r.zero(), r.one());
    while k > 0 {
        if k & 1 == 1 {
            acc = r.add(acc, pow);
        }
        pow = r.add(pow, pow);
        k >>= 1;
    }
    if n.is_negative() {
        r.neg(acc)
    } else {
        acc
    }
}

pub fn eval(r: &FiniteRing, p: &Poly, pt: &[Elem]) -> Elem {
    let mut acc = r.zero();
    for (m, c) in p.terms() {
        let mut t = int(r, c);
        for &(v, e) in m.factors() {
            for _ in 0..e {
                t = r.mul(t, pt[v as usize]);
            }
        }
        acc = r.add(acc, t);
    }
    acc
}

pub fn tuples(r: &FiniteRing, n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                r.elements().map(move |e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn points(p: &Presentation, r: &FiniteRing) -> BTreeSet<Vec<Elem>> {
    tuples(r, p.nvars()).into_iter().filter(|t| p.relations.iter().all(|q| eval(r, q, t) == r.zero())).collect()
}

pub fn pull(m: &PrimMorphism, r: &FiniteRing, b: &[Elem]) -> Vec<Elem> {
    m.images.iter().map(|im| eval(r, im, b)).collect()
}

pub fn image(m: &PrimMorphism, r: &FiniteRing) -> BTreeSet<Vec<Elem>> {
    points(&m.cod, r).iter().map(|b| pull(m, r, b)).collect()
}

/// `A_P ⊆ ∪ ∃_m A`, checked by enumeration.
pub fn models(r: &FiniteRing, ax: &Axiom) -> bool {
    let covered: BTreeSet<Vec<Elem>> = ax.morphisms().iter().flat_map(|m| image(m, r)).collect();
    points(&ax.pres, r).is_subset(&covered)
}

/// Random polynomial in `nvars` variables of total degree ≤ 2 with
/// coefficients in -2..=2.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Poly {
    let mut p = Poly::constant(rng.gen_range(-2..=2));
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = Poly::constant(*[-2, -1, 1, 2].choose(rng).unwrap());
        for _ in 0..rng.gen_range(1..=2) {
            if nvars > 0 {
                t = &t * &Poly::var(rng.gen_range(0..nvars) as Var);
            }
        }
        p = &p + &t;
    }
    p
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Random polynomials vanishing at `at`, at most `k` of them.
fn relations_at(rng: &mut ChaCha8Rng, r: &FiniteRing, at: &[Elem], k: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for _ in 0..20 {
        if out.len() >= k {
            break;
        }
        let p = random_poly(rng, at.len());
        if !p.is_zero() && p.constant_value().is_none() && eval(r, &p, at) == r.zero() {
            out.push(p);
        }
    }
    out
}

/// A random diagram over `a` with at most two objects and one arrow, plus
/// one or two members `(m, anchor object)`. Every morphism is well defined
/// by construction: target relations contain the pushed source relations.
pub fn random_diamor(rng: &mut ChaCha8Rng, a: &FiniteRing) -> (Diagram, Vec<(PrimMorphism, usize)>) {
    let nobj = rng.gen_range(1..=2);
    let arrow = nobj == 2 && rng.gen_bool(0.7);
    let rand_pt = |rng: &mut ChaCha8Rng, n: usize| -> Vec<Elem> {
        (0..n).map(|_| Elem(rng.gen_range(0..a.card()))).collect()
    };
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    if arrow {
        let (n0, n1) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a1 = rand_pt(rng, n1);
        let images: Vec<Poly> = (0..n0).map(|_| random_poly(rng, n1)).collect();
        let a0: Vec<Elem> = images.iter().map(|f| eval(a, f, &a1)).collect();
        let r0 = relations_at(rng, a, &a0, 1);
        let mut r1 = relations_at(rng, a, &a1, 1);
        r1.extend(r0.iter().map(|q| q.substitute_list(&images).unwrap()).filter(|q| !q.is_zero()));
        let p0 = Presentation::new(names("x", n0), r0);
        let p1 = Presentation::new(names("y", n1), r1);
        let u = PrimMorphism::assumed(p0.clone(), p1.clone(), images).unwrap();
        objects.push(DiagramObject { pres: p0, anchor: a0 });
        objects.push(DiagramObject { pres: p1, anchor: a1 });
        arrows.push(DiagramArrow { src: 0, tgt: 1, morphism: u });
    } else {
        for k in 0..nobj {
            let n = rng.gen_range(1..=2);
            let at = rand_pt(rng, n);
            let rels = relations_at(rng, a, &at, 1);
            objects.push(DiagramObject { pres: Presentation::new(names(&format!("v{k}_"), n), rels), anchor: at });
        }
    }
    let mut members = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let k = rng.gen_range(0..objects.len());
        let p = &objects[k].pres;
        let n = p.nvars();
        let mut rels = p.relations.clone();
        rels.push(random_poly(rng, n + 1));
        let cod = Presentation::new(names("w", n + 1), rels);
        let images = (0..n).map(|i| Poly::var(i as Var)).collect();
        members.push((PrimMorphism::assumed(p.clone(), cod, images).unwrap(), k));
    }
    (Diagram::new(a.clone(), objects, arrows).expect("valid diagram"), members)
}

/// All cocones with vertex `b`, by filtering every choice of points.
pub fn cocones(d: &Diagram, b: &FiniteRing) -> BTreeSet<Vec<Vec<Elem>>> {
    let per: Vec<Vec<Vec<Elem>>> = d.objects.iter().map(|o| points(&o.pres, b).into_iter().collect()).collect();
    let mut all: Vec<Vec<Vec<Elem>>> = vec![Vec::new()];
    for choices in &per {
        all = all
            .into_iter()
            .flat_map(|c| {
                choices.iter().map(move |g| {
                    let mut c = c.clone();
                    c.push(g.clone());
                    c
                })
            })
            .collect();
    }
    all.into_iter()
        .filter(|c| d.arrows.iter().all(|a| pull(&a.morphism, b, &c[a.tgt]) == c[a.src]))
        .collect()
}

/// Random sentence text over a few variables, in the theory DSL.
pub fn random_sentence(rng: &mut ChaCha8Rng) -> String {
    let all = ["x", "y", "z"];
    let nv = rng.gen_range(0..=3);
    let vars: Vec<String> = all[..nv].iter().map(|s| s.to_string()).collect();
    let eq = |rng: &mut ChaCha8Rng, names: &[String]| {
        let lhs = random_poly(rng, names.len()).to_string_with(names);
        let rhs = if rng.gen_bool(0.6) { "0".to_string() } else { random_poly(rng, names.len()).to_string_with(names) };
        format!("({lhs}={rhs})")
    };
    let conj = |rng: &mut ChaCha8Rng, names: &[String], k: usize| -> String {
        if k == 0 {
            return "true".into();
        }
        (0..k).map(|_| eq(rng, names)).collect::<Vec<_>>().join(" /\\ ")
    };
    let k = rng.gen_range(0..=2);
    let ante = conj(rng, &vars, k);
    let nd = rng.gen_range(0..=2);
    let cons = if nd == 0 {
        "false".to_string()
    } else {
        (0..nd)
            .map(|_| {
                let mut names = vars.clone();
                let ex = rng.gen_bool(0.4);
                if ex {
                    names.push("w".into());
                }
                let k = rng.gen_range(1..=2);
                let body = conj(rng, &names, k);
                if ex {
                    format!("exists w {body}")
                } else {
                    body
                }
            })
            .collect::<Vec<_>>()
            .join(" \\/ ")
    };
    let head = if vars.is_empty() { String::new() } else { format!("forall {} ", vars.join(",")) };
    format!("{head}{ante} => {cons}")
}

pub const DIAGRAM: &str = r#"{"ring":"Z/6","objects":[{"pres":"Z[x]/(x^2-x)","anchor":[3]},{"pres":"Z[y]/(y^3-y)","anchor":[3]}],"arrows":[{"src":0,"tgt":1,"morphism":"Z[x]/(x^2-x) -> Z[y]/(y^3-y) via x -> y^2"}]}"#;

/// One CLI invocation per subcommand, with a golden report in tests/golden.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("homs", vec!["homs", "--pres", "Z[x]/(x^2+1)", "--ring", "Z/5"]),
        ("exists", vec!["exists", "--morphism", "Z[x] -> Z[x,y]/(x-y^2) via x -> x", "--ring", "Z/7"]),
        (
            "pushout",
            vec![
                "pushout",
                "--m",
                "Z[a] -> Z[a,b]/(a*b-1) via a -> a",
                "--a",
                "Z[a] -> Z[c]/(c^2-c) via a -> c",
                "--ring",
                "Z/6",
            ],
        ),
        ("colimit", vec!["colimit", "--diagram", DIAGRAM, "--ring", "Z/4"]),
        ("ideal", vec!["ideal", "--domain", "Z", "--vars", "x", "--gen", "x^2+1", "--gen", "x-1", "--member", "1", "--member", "2"]),
        ("radical", vec!["radical", "--p", "0", "--vars", "x", "--gen", "x^2", "--q", "x"]),
        ("closure", vec!["closure", "--ring", "GF(3)", "--nvars", "2", "--point", "0,1", "--point", "2,2"]),
        ("crad", vec!["crad", "--ring", "GF(3)", "--family", "GF(9)", "--ideal", "x^2+1", "--q", "x"]),
        ("gc-check", vec!["gc-check", "--ring", "GF(3)", "--family", "GF(9)", "--ideal", "x^2+1", "--q", "x"]),
        ("sat", vec!["sat", "--ring", "Z/6", "--theory", "builtin:t_id"]),
        ("sat-text", vec!["--text", "sat", "--ring", "Z/4", "--theory", "builtin:t_rr", "--bound", "2", "--verbose"]),
        ("classify", vec!["classify", "--theory", "builtin:t_rcf", "--bound", "3"]),
        (
            "resultant",
            vec![
                "resultant",
                "--n",
                "Z[x] -> Z[x]/(x) via x -> x",
                "--m",
                "Z[x] -> Z[x,y]/(x*y-1) via x -> x",
                "--family",
                "Z/4,Z/6,GF(4)",
            ],
        ),
        (
            "cover",
            vec!["cover", "--m", "builtin:e", "--x", "builtin:i", "--family", "GF(2),GF(3),GF(4),GF(5),Z/4"],
        ),
        ("diamor", vec!["diamor", "--diagram", DIAGRAM, "--pair", "1:Z[y]/(y^3-y) -> Z[y,z]/(y^3-y,y*z-1) via y -> y", "--target", "Z/2", "--target", "Z/3"]),
        ("rprod", vec!["rprod", "--family", "Z/2,Z/3,Z/4", "--gen", "0,1", "--iso", "Z/6", "--theory", "builtin:t_id"]),
        ("purity", vec!["purity", "--from", "GF(3)", "--to", "GF(9)", "--morphism", "Z[] -> Z[x]/(x^2+1)"]),
        ("member", vec!["member", "--morphism", "Z[x] -> Z[x,y]/(y^2-x) via x -> x", "--ring", "Z/7", "--point", "2"]),
        ("usage-error", vec!["homs", "--ring", "Z/5"]),
        ("input-error", vec!["homs", "--pres", "Z[x]/(x^2+", "--ring", "Z/5"]),
    ]
}
