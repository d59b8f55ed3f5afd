//! Runs every acceptance criterion at its stated tolerance and time limit
//! and prints one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use common::*;
use ringlogic::finring::{ring_homs, RingHom};
use ringlogic::fpring::{colimit, pushout};
use ringlogic::groebner::{eliminate, gbasis, radical_member, Domain};
use ringlogic::points::{
    exists_set, gc_check, homs, purity_check, zariski_closure, AffineContext,
};
use ringlogic::products::{colimit_check, find_isomorphism, make_filter, preservation_check, reduced_product};
use ringlogic::syntax::parse_poly;
use ringlogic::theory::{
    builtin, classify, complement_cover, diamor_check, parse_sentence, parse_theory, satisfies, Axiom, BUILTIN_NAMES,
};
use ringlogic::{Budget, Elem, FiniteRing, MonomialOrder, Poly, Presentation, PrimMorphism};

type Outcome = Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e(v: &[u32]) -> Vec<Elem> {
    v.iter().map(|&x| Elem(x)).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn hom_count() -> Outcome {
    let b = Budget::default();
    for (pres, r, want) in [("Z[x]/(x^2+1)", "Z/5", 2), ("Z[x]/(x^2+1)", "Z/3", 0), ("Z[x]/(x^2-x)", "Z/6", 4)] {
        let p = Presentation::parse(pres).unwrap();
        let r = ring(r);
        let got = homs(&p, &r, &b).map_err(|e| e.to_string())?;
        ensure!(got.len() == want, "|hom({pres}, {r})| = {} != {want}", got.len());
        ensure!(got.members.iter().cloned().collect::<BTreeSet<_>>() == points(&p, &r), "oracle disagrees on {pres}");
    }
    Ok("2, 0, 4".into())
}

fn equality_calculus() -> Outcome {
    let b = Budget::default();
    let (eq, ne) = (PrimMorphism::builtin("e").unwrap(), PrimMorphism::builtin("i").unwrap());
    for spec in ["GF(2)", "GF(3)", "GF(4)", "GF(5)"] {
        let a = ring(spec);
        let diag: BTreeSet<Vec<Elem>> = a.elements().map(|x| vec![x, x]).collect();
        let off: BTreeSet<Vec<Elem>> = tuples(&a, 2).into_iter().filter(|t| t[0] != t[1]).collect();
        let got_e: BTreeSet<_> = exists_set(&eq, &a, &b).unwrap().members.into_iter().collect();
        let got_i: BTreeSet<_> = exists_set(&ne, &a, &b).unwrap().members.into_iter().collect();
        ensure!(got_e == diag, "∃_e {spec} is not the diagonal");
        ensure!(got_i == off, "∃_i {spec} is not the complement of the diagonal");
        let c = complement_cover(&eq, std::slice::from_ref(&ne), std::slice::from_ref(&a), &b).unwrap();
        ensure!(c.exact, "cover of {spec} is not exact");
    }
    Ok("4 fields".into())
}

fn sat_with(r: &FiniteRing, ax: &Axiom) -> Result<Option<Vec<Elem>>, String> {
    let rep = satisfies(r, ax, false, &Budget::default()).map_err(|e| e.to_string())?;
    ensure!(rep.holds == models(r, ax), "{r} / {}: verdict disagrees with enumeration", ax.label());
    if let Some(w) = &rep.witness {
        let covered = ax.morphisms().iter().any(|m| image(m, r).contains(w));
        ensure!(points(&ax.pres, r).contains(w) && !covered, "{r} / {}: witness {w:?} is not one", ax.label());
    }
    Ok(rep.witness)
}

fn axiom(theory: &str, bound: u32, label: &str) -> Axiom {
    builtin(theory, bound).unwrap().axioms(bound).unwrap().into_iter().find(|a| a.label() == label).unwrap()
}

fn satisfaction_suite() -> Outcome {
    let w = sat_with(&ring("Z/6"), &axiom("t_id", 2, "domain"))?;
    ensure!(w == Some(e(&[2, 3])), "Z/6 domain witness {w:?}");
    let w = sat_with(&ring("Z/4"), &axiom("t_rr", 2, "reduced[n=2]"))?;
    ensure!(w == Some(e(&[2])), "Z/4 reduced witness {w:?}");
    let t_f = builtin("t_f", 2).unwrap().axioms(2).unwrap();
    for q in ["GF(2)", "GF(3)", "GF(4)", "GF(5)"] {
        let r = ring(q);
        for ax in &t_f {
            ensure!(sat_with(&r, ax)?.is_none(), "{q} fails {}", ax.label());
        }
        let w = sat_with(&r, &axiom("t_acf", 2, "root2"))?;
        ensure!(w.is_some(), "{q} has every monic quadratic root");
    }
    Ok("Z/6, Z/4, 4 fields".into())
}

fn diamor() -> Outcome {
    let b = Budget::default();
    let mut g = rng(0xD1A);
    let targets: Vec<FiniteRing> = ["Z/2", "Z/3", "Z/4", "Z/2 x Z/2"].iter().map(|s| ring(s)).collect();
    let sources = [ring("Z/4"), ring("Z/6")];
    let n = 240;
    let mut holds = 0;
    for i in 0..n {
        let a = sources.choose(&mut g).unwrap();
        let (d, xs) = random_diamor(&mut g, a);
        let t = targets.choose(&mut g).unwrap();
        let r = diamor_check(&xs, &d, t, &b).map_err(|e| format!("instance {i}: {e}"))?;
        let cs = cocones(&d, t);
        let oracle = cs.iter().all(|c| xs.iter().any(|(m, k)| image(m, t).contains(&c[*k])));
        ensure!(r.agree, "instance {i}: axiom {} vs cocones {}", r.axiom_holds, r.cocones_realise);
        ensure!(r.cocones_realise == oracle && r.cocones == cs.len(), "instance {i}: cocone oracle disagrees");
        holds += usize::from(r.axiom_holds);
    }
    Ok(format!("{n} instances, {holds} satisfied"))
}

fn universal_properties() -> Outcome {
    let b = Budget::default();
    let targets: Vec<FiniteRing> = [
        "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/8", "Z/9", "GF(4)", "GF(8)", "GF(9)", "Z/2 x Z/2", "Z/2 x Z/3",
        "Z/2 x Z/4",
    ]
    .iter()
    .map(|s| ring(s))
    .collect();
    let pairs = [
        ("Z[x] -> Z[x,y]/(x*y-1) via x -> x", "Z[x] -> Z[z]/(z^2) via x -> z"),
        ("Z[x]/(x^2-x) -> Z[y]/(y^2-y) via x -> y", "Z[x]/(x^2-x) -> Z[z]/(z^2-z) via x -> 1-z"),
        ("Z[x] -> Z[y] via x -> y^2", "Z[x] -> Z[z] via x -> z^3"),
        ("Z[x] -> Z[y]/(2*y) via x -> y", "Z[x] -> Z[z] via x -> z+1"),
        ("Z[] -> Z[x]/(x^2+1)", "Z[] -> Z[y]/(y^2-2)"),
        ("Z[x,y] -> Z[x] via x -> x, y -> x", "Z[x,y] -> Z[u,v]/(u*v) via x -> u, y -> v"),
        ("Z[x] -> Z[x,y]/(y^2-x) via x -> x", "Z[x] -> Z[x,z]/(z^3-x) via x -> x"),
    ];
    let mut checked = 0;
    for (m, a) in pairs {
        let (m, a) = (PrimMorphism::parse(m).unwrap(), PrimMorphism::parse(a).unwrap());
        let po = pushout(&m, &a).map_err(|e| e.to_string())?;
        for t in &targets {
            let apex = points(&po.apex, t);
            ensure!(homs(&po.apex, t, &b).unwrap().members.into_iter().collect::<BTreeSet<_>>() == apex, "apex points");
            let legs: BTreeSet<_> = apex.iter().map(|p| (pull(&po.in_q, t, p), pull(&po.in_r, t, p))).collect();
            let mut compatible = BTreeSet::new();
            for q in points(&m.cod, t) {
                for r in points(&a.cod, t) {
                    if pull(&m, t, &q) == pull(&a, t, &r) {
                        compatible.insert((q.clone(), r));
                    }
                }
            }
            ensure!(legs.len() == apex.len() && legs == compatible, "pushout {m} / {a} in {t}");
            checked += 1;
        }
    }
    let mut g = rng(0xC011);
    for i in 0..40 {
        let a = if i % 2 == 0 { ring("Z/4") } else { ring("Z/6") };
        let (d, _) = random_diamor(&mut g, &a);
        let col = colimit(&d).map_err(|e| e.to_string())?;
        for t in &targets {
            let apex = points(&col.apex, t);
            let legs: BTreeSet<Vec<Vec<Elem>>> =
                apex.iter().map(|p| col.injections.iter().map(|inj| pull(inj, t, p)).collect()).collect();
            ensure!(legs.len() == apex.len() && legs == cocones(&d, t), "colimit {i} in {t}");
            checked += 1;
        }
    }
    Ok(format!("{checked} (cone, target) pairs"))
}

fn nullstellensatz() -> Outcome {
    let b = Budget::default();
    let f3 = ring("GF(3)");
    let x = names(&["x"]);
    let ideal = vec![parse_poly("x^2+1", &x).unwrap()];
    let q = parse_poly("x", &x).unwrap();
    let r = gc_check(&AffineContext::new(&f3, 1), &[ring("GF(9)")], &ideal, &[q], &b).map_err(|e| e.to_string())?;
    let entry = &r.entries[0];
    ensure!(!r.consistent && r.zeros.is_empty(), "F_3 relative to GF(9) reported consistent");
    ensure!(entry.vanishing && !entry.crad && entry.crad_witness.is_some(), "mismatch certificate missing");

    let specs = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "GF(4)", "Z/7", "GF(8)", "Z/9", "GF(9)"];
    let mut g = rng(0x6C);
    for i in 0..20 {
        let a = ring(specs[i % specs.len()]);
        let nx = 1 + i / specs.len();
        let vars: Vec<String> = (0..nx).map(|k| format!("x{k}")).collect();
        let ideal: Vec<Poly> = (0..g.gen_range(1..=2)).map(|_| random_poly(&mut g, nx)).collect();
        let qs: Vec<Poly> = (0..3).map(|_| random_poly(&mut g, nx)).collect();
        let r = gc_check(&AffineContext::new(&a, nx), std::slice::from_ref(&a), &ideal, &qs, &b).map_err(|e| e.to_string())?;
        let txt: Vec<String> = ideal.iter().map(|p| p.to_string_with(&vars)).collect();
        ensure!(r.consistent, "reflexive instance {i} over {a} with ideal {txt:?}");
    }
    Ok("certificate + 20 reflexive".into())
}

fn groebner() -> Outcome {
    let gb = ringlogic::groebner::GbBudget::default();
    let x = names(&["x"]);
    let gens: Vec<Poly> = ["x^2+1", "x-1"].iter().map(|s| parse_poly(s, &x).unwrap()).collect();
    let one = Poly::one();
    let q = gbasis(&gens, &MonomialOrder::grlex(), Domain::Rationals, &gb).unwrap();
    ensure!(q.is_unit_ideal() && q.contains(&one).unwrap(), "1 not proved over Q");
    let z = gbasis(&gens, &MonomialOrder::grlex(), Domain::Integers, &gb).unwrap();
    ensure!(!z.is_unit_ideal() && !z.contains(&one).unwrap(), "1 not refuted over Z");
    // Z[x] -> Z/2, x -> 1 kills both generators but not 1.
    let f2 = ring("Z/2");
    ensure!(gens.iter().all(|g| eval(&f2, g, &[Elem(1)]) == f2.zero()), "evaluation does not kill the ideal");
    ensure!(eval(&f2, &one, &[Elem(1)]) != f2.zero(), "evaluation kills 1");
    let m = radical_member(&parse_poly("x", &x).unwrap(), &[parse_poly("x^2", &x).unwrap()], 0, &gb).unwrap();
    ensure!(m.holds(), "x not in rad(x^2)");
    let v = names(&["x", "y", "t"]);
    let cubic = eliminate(
        &[parse_poly("x-t^2", &v).unwrap(), parse_poly("y-t^3", &v).unwrap()],
        &[0, 1],
        Domain::Rationals,
        &gb,
    )
    .unwrap();
    let want = parse_poly("y^2-x^3", &v).unwrap();
    ensure!(cubic.len() == 1 && (cubic[0] == want || cubic[0] == -&want), "elimination gave {cubic:?}");
    Ok("Q unit, Z proper, radical, elimination".into())
}

fn subsets(all: &[Vec<Elem>]) -> Vec<Vec<Vec<Elem>>> {
    (0..1u32 << all.len())
        .map(|mask| all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect())
        .collect()
}

fn zariski() -> Outcome {
    let b = Budget::default();
    let mut g = rng(0x2A);
    let mut count = 0;
    for q in [2u32, 3, 5] {
        let f = ring(&format!("GF({q})"));
        for n in [1usize, 2] {
            let all = tuples(&f, n);
            let cases: Vec<Vec<Vec<Elem>>> = if q <= 3 && n == 1 {
                subsets(&all)
            } else {
                (0..100).map(|_| all.iter().filter(|_| g.gen_bool(0.5)).cloned().collect()).collect()
            };
            for set in cases {
                let cl = zariski_closure(&f, n, &set, None, &b).map_err(|e| e.to_string())?;
                let cl: BTreeSet<_> = cl.into_iter().collect();
                ensure!(cl == set.iter().cloned().collect(), "closure of {set:?} in GF({q})^{n} is {cl:?}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} subsets"))
}

fn is_iso(f: &RingHom) -> bool {
    let (a, b) = (&f.dom, &f.cod);
    let img: BTreeSet<Elem> = f.map.iter().copied().collect();
    img.len() == b.card() as usize
        && a.card() == b.card()
        && f.map[a.one().0 as usize] == b.one()
        && a.elements().all(|x| {
            a.elements().all(|y| {
                f.map[a.add(x, y).0 as usize] == b.add(f.map[x.0 as usize], f.map[y.0 as usize])
                    && f.map[a.mul(x, y).0 as usize] == b.mul(f.map[x.0 as usize], f.map[y.0 as usize])
            })
        })
}

fn reduced_products() -> Outcome {
    let b = Budget::default();
    let small: Vec<FiniteRing> = ["Z/2", "Z/3", "Z/4", "GF(4)", "Z/2 x Z/2"].iter().map(|s| ring(s)).collect();
    let mut collapses = 0;
    for f0 in &small {
        for f1 in &small {
            for f2 in &small {
                let fam = vec![f0.clone(), f1.clone(), f2.clone()];
                for i in 0..3 {
                    let filter = make_filter(&[0, 1, 2], &[vec![i]]).unwrap();
                    let rp = reduced_product(&fam, &filter).map_err(|e| e.to_string())?;
                    let f = rp.ultra_isomorphism().map_err(|e| e.to_string())?.ok_or("no collapse map")?;
                    ensure!(is_iso(&f) && f.cod.to_string() == fam[i].to_string(), "collapse onto factor {i}");
                    ensure!(colimit_check(&rp).unwrap().isomorphic, "colimit check at {i}");
                    collapses += 1;
                }
            }
        }
    }
    let crt = find_isomorphism(&ring("Z/2 x Z/3"), &ring("Z/6"), &b).unwrap().ok_or("Z/2 x Z/3 and Z/6 not matched")?;
    ensure!(is_iso(&crt), "CRT map is not an isomorphism");

    let horn = horn_axioms();
    let mut cases = 0;
    let pool: Vec<FiniteRing> = ["Z/2", "Z/3", "Z/4", "GF(4)"].iter().map(|s| ring(s)).collect();
    for (i, f0) in pool.iter().enumerate() {
        for f1 in &pool[i..] {
            let fam = vec![f0.clone(), f1.clone()];
            for gens in [vec![vec![0]], vec![vec![1]], vec![vec![0, 1]]] {
                let filter = make_filter(&[0, 1], &gens).unwrap();
                let rp = reduced_product(&fam, &filter).unwrap();
                for ax in &horn {
                    let r = preservation_check(ax, &fam, &filter, &b).map_err(|e| e.to_string())?;
                    ensure!(!r.violation, "{} not preserved by {:?}", ax.label(), gens);
                    let factors_ok = filter.min.iter().all(|&k| models(&fam[k], ax));
                    ensure!(!factors_ok || models(&rp.carrier, ax), "oracle: {} fails in {}", ax.label(), rp.carrier);
                    cases += 1;
                }
            }
        }
    }

    let fam = vec![ring("Z/2"), ring("Z/3")];
    let filter = make_filter(&[0, 1], &[vec![0, 1]]).unwrap();
    let dom = axiom("t_id", 1, "domain");
    let r = preservation_check(&dom, &fam, &filter, &b).unwrap();
    let w = r.product_witness.ok_or("t_id holds in Z/2 x Z/3")?;
    let p = ring("Z/2 x Z/3");
    ensure!(
        r.factors_model.iter().all(|&m| m) && p.mul(w[0], w[1]) == p.zero() && w[0] != p.zero() && w[1] != p.zero(),
        "bad zero-divisor witness {w:?}"
    );
    Ok(format!("{collapses} collapses, CRT, {cases} Horn cases"))
}

/// Horn axioms from the builtin theories plus random Horn sentences.
fn horn_axioms() -> Vec<Axiom> {
    let gb = ringlogic::groebner::GbBudget::default();
    let mut out = Vec::new();
    for t in ["nontrivial", "char(2)", "char(4)", "t_rr", "real_horn", "t_pr"] {
        out.extend(builtin(t, 2).unwrap().axioms(2).unwrap());
    }
    let mut g = rng(0x40);
    while out.len() < 40 {
        let s = random_sentence(&mut g);
        let ax = Axiom::from_sentence(&parse_sentence(&s).unwrap(), None).unwrap();
        if ax.pres.nvars() <= 2 && classify(&ax, &gb).horn && ax.morphisms().iter().all(|m| m.cod.nvars() <= 3) {
            out.push(ax);
        }
    }
    out.retain(|a| classify(a, &gb).horn);
    out
}

fn purity() -> Outcome {
    let b = Budget::default();
    let (f3, f9) = (ring("GF(3)"), ring("GF(9)"));
    let f = ring_homs(&f3, &f9, 1000).unwrap().remove(0);
    let m = PrimMorphism::parse("Z[] -> Z[x]/(x^2+1)").unwrap();
    let r = purity_check(&f, &m, &[], &b).unwrap();
    ensure!(r.pure_violation && r.phrasings_agree(), "F_3 -> GF(9) not reported impure");

    let pairs = [
        ("GF(3)", "GF(9)"),
        ("Z/2", "GF(4)"),
        ("Z/4", "Z/2"),
        ("Z/6", "Z/3"),
        ("Z/2", "Z/2 x Z/2"),
        ("Z/2 x Z/2", "Z/2"),
        ("Z/9", "Z/3"),
        ("GF(2)", "GF(8)"),
        ("Z/3", "Z/3"),
    ];
    let mut g = rng(0x9E);
    let mut impure = 0;
    for i in 0..50 {
        let (sa, sb) = pairs[i % pairs.len()];
        let (a, bb) = (ring(sa), ring(sb));
        let hs = ring_homs(&a, &bb, 10_000).unwrap();
        let f = hs.choose(&mut g).unwrap();
        let n = g.gen_range(0..=1);
        let dom = Presentation::new((0..n).map(|k| format!("x{k}")).collect(), vec![]);
        let mut rels = vec![random_poly(&mut g, n + 1)];
        if g.gen_bool(0.3) {
            rels.push(random_poly(&mut g, n + 1));
        }
        let cod = Presentation::new((0..=n).map(|k| format!("y{k}")).collect(), rels);
        let images = (0..n).map(|k| Poly::var(k as u32)).collect();
        let m = PrimMorphism::assumed(dom, cod, images).unwrap();
        let pt: Vec<Elem> = (0..n).map(|_| Elem(g.gen_range(0..a.card()))).collect();
        let r = purity_check(f, &m, &pt, &b).map_err(|e| e.to_string())?;
        ensure!(r.phrasings_agree(), "instance {i}: phrasings disagree for {m} along {sa} -> {sb}");
        let fa: Vec<Elem> = pt.iter().map(|x| f.map[x.0 as usize]).collect();
        let oracle = image(&m, &bb).contains(&fa) && !image(&m, &a).contains(&pt);
        ensure!(r.pure_violation == oracle, "instance {i}: pure violation {} vs oracle {oracle}", r.pure_violation);
        impure += usize::from(oracle);
    }
    Ok(format!("50 instances, {impure} impure"))
}

fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden"))
}

fn parser_printer() -> Outcome {
    for name in BUILTIN_NAMES {
        let name = name.replace("(n)", "(6)").replace("(p)", "(3)");
        let t = builtin(&name, 4).unwrap();
        let text = t.to_string();
        let back = parse_theory(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure!(back == t && back.to_string() == text, "{name} does not round-trip");
    }
    let mut g = rng(0x5E);
    for i in 0..500 {
        let src = random_sentence(&mut g);
        let s = parse_sentence(&src).map_err(|e| format!("fuzz {i} `{src}`: {e}"))?;
        let printed = s.to_string();
        let back = parse_sentence(&printed).map_err(|e| format!("reparse `{printed}`: {e}"))?;
        ensure!(back == s && back.to_string() == printed, "fuzz {i}: `{src}` unstable");
    }
    for (name, args) in golden_cases() {
        let (_, first) = ringlogic::cli::execute(args.iter().copied());
        let (_, second) = ringlogic::cli::execute(args.iter().copied());
        ensure!(first == second, "{name}: report is not deterministic");
        let want = std::fs::read_to_string(golden_dir().join(format!("{name}.out"))).map_err(|e| format!("{name}: {e}"))?;
        ensure!(first == want, "{name}: report differs from golden");
    }
    Ok(format!("{} builtins, 500 fuzzed, {} goldens", BUILTIN_NAMES.len(), golden_cases().len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("hom-set enumeration", hom_count, 1),
        ("equality calculus", equality_calculus, 1),
        ("theory satisfaction", satisfaction_suite, 5),
        ("change of basis double oracle", diamor, 60),
        ("colimit/pushout universal properties", universal_properties, 60),
        ("nullstellensatz certificate", nullstellensatz, 5),
        ("groebner integrity", groebner, 5),
        ("zariski closure", zariski, 30),
        ("reduced products", reduced_products, 10),
        ("purity", purity, 10),
        ("parser/printer", parser_printer, 10),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout();
    for (k, (name, run, secs)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let verdict = match res {
            Ok(detail) if took <= Duration::from_secs(*secs) => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  {detail}; took longer than {secs} s"),
            Err(why) => format!("FAIL  {why}"),
        };
        failed += usize::from(verdict.starts_with("FAIL"));
        writeln!(out, "criterion {:>2} {name:<38} {:>8.3} s  {verdict}", k + 1, took.as_secs_f64()).unwrap();
    }
    writeln!(out, "acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len()).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
