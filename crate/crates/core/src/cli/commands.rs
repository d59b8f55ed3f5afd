use std::collections::BTreeSet;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::{Command, Outcome, SystemArgs, TheoryArgs};
use crate::finring::{make_ring, ring_homs, Elem, FiniteRing, RingHom};
use crate::fpring::{colimit, pushout, verify_well_defined, Diagram, DiagramArrow, DiagramObject, VerifyTools};
use crate::groebner::{gbasis, radical_member, Domain};
use crate::points::{
    cocones, crad_member, exists_set, gc_check, homs, in_exists, is_point, precompose, purity_check, zariski_closure,
    AffineContext,
};
use crate::poly::{MonomialOrder, Poly};
use crate::products::{colimit_check, find_isomorphism, make_filter, preservation_check, reduced_product};
use crate::syntax::{parse_poly, split_top_level};
use crate::theory::{
    builtin, change_of_basis, classify, complement_cover, diamor_check, parse_sentence, parse_theory,
    resultant_member, satisfies, Axiom,
};
use crate::{Budget, Error, Presentation, PrimMorphism, Result, Verification};

pub(crate) fn run(cmd: &Command, b: &Budget) -> Result<Outcome> {
    match cmd {
        Command::Homs { pres, ring } => homs_cmd(pres, ring, b),
        Command::Exists { morphism, ring } => exists_cmd(morphism, ring, b),
        Command::Pushout { m, a, ring } => pushout_cmd(m, a, ring.as_deref(), b),
        Command::Colimit { diagram, ring } => colimit_cmd(diagram, ring.as_deref(), b),
        Command::Ideal { domain, vars, gens, order, member } => ideal_cmd(domain, vars, gens, order, member, b),
        Command::Radical { p, vars, gens, q } => radical_cmd(*p, vars, gens, q, b),
        Command::Closure { ring, nvars, point, degree } => closure_cmd(ring, *nvars, point, *degree, b),
        Command::Crad { system, q } => crad_cmd(system, q, b),
        Command::GcCheck { system, q } => gc_cmd(system, q, b),
        Command::Sat { ring, theory, verbose } => sat_cmd(ring, theory, *verbose, b),
        Command::Classify { theory } => classify_cmd(theory, b),
        Command::Resultant { n, m, family } => resultant_cmd(n, m, family, b),
        Command::Cover { m, x, family } => cover_cmd(m, x, family, b),
        Command::Diamor { diagram, pair, target } => diamor_cmd(diagram, pair, target, b),
        Command::Rprod { family, gens, iso, theory, sentence, bound } => {
            rprod_cmd(family, gens, iso.as_deref(), theory.as_deref(), sentence.as_deref(), *bound, b)
        }
        Command::Purity { from, to, hom, morphism, point } => purity_cmd(from, to, *hom, morphism, point, b),
        Command::Member { morphism, ring, point } => member_cmd(morphism, ring, point, b),
    }
}

fn ok(body: Value) -> Result<Outcome> {
    Ok(Outcome { body, violated: false })
}

fn check(body: Value, holds: bool) -> Result<Outcome> {
    Ok(Outcome { body, violated: !holds })
}

fn ring(spec: &str) -> Result<FiniteRing> {
    Ok(make_ring(spec)?)
}

fn rings(specs: &[String]) -> Result<Vec<FiniteRing>> {
    specs.iter().map(|s| ring(s)).collect()
}

/// Parses a morphism and rejects it if it is provably not well defined.
fn morphism(src: &str, b: &Budget) -> Result<PrimMorphism> {
    let m = PrimMorphism::parse(src)?;
    let tools = VerifyTools { budget: b.clone(), ..VerifyTools::default() };
    let (m, wd) = verify_well_defined(&m, &tools);
    if wd.status == Verification::Refuted {
        return Err(Error::invalid(format!("`{src}` does not respect the domain relations")));
    }
    Ok(m)
}

fn point(r: &FiniteRing, text: &str, arity: usize) -> Result<Vec<Elem>> {
    let t = text.trim();
    let p: Vec<Elem> = if t.is_empty() {
        Vec::new()
    } else {
        split_top_level(t, ',').into_iter().map(|s| r.parse_elem(s)).collect::<std::result::Result<_, _>>()?
    };
    if p.len() != arity {
        return Err(Error::invalid(format!("point `{text}` has {} components, expected {arity}", p.len())));
    }
    Ok(p)
}

fn pt_json(r: &FiniteRing, p: &[Elem]) -> Value {
    Value::Array(p.iter().map(|&e| r.elem_json(e)).collect())
}

fn pts_json<'a>(r: &FiniteRing, ps: impl IntoIterator<Item = &'a Vec<Elem>>) -> Value {
    Value::Array(ps.into_iter().map(|p| pt_json(r, p)).collect())
}

fn named_point(r: &FiniteRing, names: &[String], p: &[Elem]) -> Value {
    let mut m = Map::new();
    for (n, &e) in names.iter().zip(p) {
        m.insert(n.clone(), r.elem_json(e));
    }
    Value::Object(m)
}

fn hom_json(f: &RingHom) -> Value {
    json!({
        "from": f.dom.to_string(),
        "to": f.cod.to_string(),
        "images": f.map.iter().map(|&e| f.cod.elem_json(e)).collect::<Vec<_>>(),
    })
}

fn polys(srcs: &[String], names: &[String]) -> Result<Vec<Poly>> {
    srcs.iter().map(|s| Ok(parse_poly(s, names)?)).collect()
}

fn homs_cmd(pres: &str, r: &str, b: &Budget) -> Result<Outcome> {
    let p = Presentation::parse(pres)?;
    let r = ring(r)?;
    let set = homs(&p, &r, b)?;
    for pt in &set.members {
        if !is_point(&p, &r, pt)? {
            return Err(Error::Bug(format!("{pt:?} is not a point")));
        }
    }
    ok(json!({
        "presentation": p.to_string(),
        "ring": r.to_string(),
        "count": set.len(),
        "points": pts_json(&r, &set.members),
    }))
}

fn exists_cmd(m: &str, r: &str, b: &Budget) -> Result<Outcome> {
    let m = morphism(m, b)?;
    let r = ring(r)?;
    let set = exists_set(&m, &r, b)?;
    for pt in &set.members {
        if !in_exists(&m, &r, pt, b)? {
            return Err(Error::Bug(format!("{pt:?} is not in the image")));
        }
    }
    ok(json!({
        "morphism": m.to_string(),
        "ring": r.to_string(),
        "count": set.len(),
        "points": pts_json(&r, &set.members),
    }))
}

fn pushout_cmd(m: &str, a: &str, r: Option<&str>, b: &Budget) -> Result<Outcome> {
    let (m, a) = (morphism(m, b)?, morphism(a, b)?);
    let po = pushout(&m, &a)?;
    let mut body = json!({
        "apex": po.apex.to_string(),
        "in_q": po.in_q.images_text(),
        "in_r": po.in_r.images_text(),
    });
    let mut holds = true;
    if let Some(r) = r {
        let r = ring(r)?;
        let legs: BTreeSet<(Vec<Elem>, Vec<Elem>)> = homs(&po.apex, &r, b)?
            .members
            .iter()
            .map(|p| Ok((precompose(&po.in_q, &r, p)?, precompose(&po.in_r, &r, p)?)))
            .collect::<Result<_>>()?;
        let qs = homs(&m.cod, &r, b)?;
        let rs = homs(&a.cod, &r, b)?;
        let mut pairs = BTreeSet::new();
        for q in &qs.members {
            for s in &rs.members {
                if precompose(&m, &r, q)? == precompose(&a, &r, s)? {
                    pairs.insert((q.clone(), s.clone()));
                }
            }
        }
        holds = legs == pairs;
        body["universal_property"] = json!({
            "ring": r.to_string(),
            "apex_points": legs.len(),
            "compatible_pairs": pairs.len(),
            "bijective": holds,
        });
    }
    check(body, holds)
}

#[derive(Deserialize)]
struct DiagramFile {
    ring: String,
    objects: Vec<ObjectFile>,
    #[serde(default)]
    arrows: Vec<ArrowFile>,
}

#[derive(Deserialize)]
struct ObjectFile {
    pres: String,
    #[serde(default)]
    anchor: Vec<Value>,
}

#[derive(Deserialize)]
struct ArrowFile {
    src: usize,
    tgt: usize,
    morphism: String,
}

/// A diagram given inline as JSON or as the path of a JSON file.
fn load_diagram(src: &str, b: &Budget) -> Result<Diagram> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src).map_err(|e| Error::invalid(format!("cannot read `{src}`: {e}")))?
    };
    let f: DiagramFile = serde_json::from_str(&text).map_err(|e| Error::invalid(format!("diagram: {e}")))?;
    let r = ring(&f.ring)?;
    let mut objects = Vec::with_capacity(f.objects.len());
    for o in &f.objects {
        let pres = Presentation::parse(&o.pres)?;
        let text: Vec<String> = o
            .anchor
            .iter()
            .map(|v| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect();
        let anchor = point(&r, &text.join(","), pres.nvars())?;
        objects.push(DiagramObject { pres, anchor });
    }
    let arrows = f
        .arrows
        .iter()
        .map(|a| Ok(DiagramArrow { src: a.src, tgt: a.tgt, morphism: morphism(&a.morphism, b)? }))
        .collect::<Result<Vec<_>>>()?;
    Diagram::new(r, objects, arrows)
}

fn colimit_cmd(diagram: &str, r: Option<&str>, b: &Budget) -> Result<Outcome> {
    let d = load_diagram(diagram, b)?;
    let col = colimit(&d)?;
    let mut body = json!({
        "apex": col.apex.to_string(),
        "injections": col.injections.iter().map(|i| i.images_text()).collect::<Vec<_>>(),
    });
    let mut holds = true;
    if let Some(r) = r {
        let r = ring(r)?;
        let cs: BTreeSet<Vec<Vec<Elem>>> = cocones(&d, &r, b)?.into_iter().collect();
        let pts = homs(&col.apex, &r, b)?;
        let legs: BTreeSet<Vec<Vec<Elem>>> = pts
            .members
            .iter()
            .map(|p| col.injections.iter().map(|i| precompose(i, &r, p)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        holds = legs == cs && legs.len() == pts.len();
        body["universal_property"] = json!({
            "ring": r.to_string(),
            "apex_points": pts.len(),
            "cocones": cs.len(),
            "bijective": holds,
        });
    }
    check(body, holds)
}

fn domain(text: &str) -> Result<Domain> {
    match text.trim() {
        "Q" => Ok(Domain::Rationals),
        "Z" => Ok(Domain::Integers),
        t => t
            .strip_prefix("Z/")
            .and_then(|p| p.parse().ok())
            .map(Domain::Fp)
            .ok_or_else(|| Error::invalid(format!("unknown coefficient domain `{t}` (Q, Z or Z/p)"))),
    }
}

fn order(text: &str) -> Result<MonomialOrder> {
    match text {
        "grlex" => Ok(MonomialOrder::grlex()),
        "lex" => Ok(MonomialOrder::lex()),
        o => Err(Error::invalid(format!("unknown monomial order `{o}`"))),
    }
}

fn ideal_cmd(
    dom: &str,
    vars: &[String],
    gens: &[String],
    ord: &str,
    member: &[String],
    b: &Budget,
) -> Result<Outcome> {
    let d = domain(dom)?;
    let ord = order(ord)?;
    let gens = polys(gens, vars)?;
    let gb = gbasis(&gens, &ord, d, &b.groebner)?;
    let mut members = Vec::new();
    for (src, q) in member.iter().zip(polys(member, vars)?) {
        let nf = gb.normal_form(&q)?;
        members.push(json!({
            "poly": src,
            "member": nf.is_zero(),
            "normal_form": nf.to_string_with(vars),
        }));
    }
    ok(json!({
        "domain": d.to_string(),
        "vars": vars,
        "basis": gb.gens.iter().map(|g| g.to_string_with(vars)).collect::<Vec<_>>(),
        "unit_ideal": gb.is_unit_ideal(),
        "members": members,
    }))
}

fn radical_cmd(p: u32, vars: &[String], gens: &[String], q: &str, b: &Budget) -> Result<Outcome> {
    let gens = polys(gens, vars)?;
    let q = parse_poly(q, vars)?;
    let m = radical_member(&q, &gens, p, &b.groebner)?;
    ok(json!({
        "q": q.to_string_with(vars),
        "p": p,
        "membership": if m.holds() { "proved" } else { "refuted" },
    }))
}

fn closure_cmd(r: &str, nvars: usize, pts: &[String], degree: Option<u32>, b: &Budget) -> Result<Outcome> {
    let r = ring(r)?;
    let e: BTreeSet<Vec<Elem>> = pts.iter().map(|p| point(&r, p, nvars)).collect::<Result<_>>()?;
    let e: Vec<Vec<Elem>> = e.into_iter().collect();
    let cl = zariski_closure(&r, nvars, &e, degree, b)?;
    if !e.iter().all(|p| cl.contains(p)) {
        return Err(Error::Bug("closure does not contain the input".into()));
    }
    ok(json!({
        "ring": r.to_string(),
        "nvars": nvars,
        "degree": degree,
        "input": pts_json(&r, &e),
        "closure": pts_json(&r, &cl),
        "closed": cl == e,
    }))
}

struct System {
    ctx: AffineContext,
    family: Vec<FiniteRing>,
    ideal: Vec<Poly>,
    names: Vec<String>,
}

fn system(s: &SystemArgs) -> Result<System> {
    let r = ring(&s.ring)?;
    Ok(System {
        ctx: AffineContext::new(&r, s.vars.len()),
        family: rings(&s.family)?,
        ideal: polys(&s.ideal, &s.vars)?,
        names: s.vars.clone(),
    })
}

/// Re-checks a relative-radical refusal: the hom is a hom, the point is a
/// zero of the pushed ideal and `q` does not vanish there.
fn crad_witness(sys: &System, q: &Poly, w: &(usize, Vec<Elem>, Vec<Elem>)) -> Result<Value> {
    let (k, map, z) = w;
    let target = &sys.family[*k];
    let f = RingHom::from_map(&sys.ctx.ring, target, map.clone());
    let up = sys.ctx.push(&f)?;
    let zero_ok = sys.ideal.iter().map(|p| up.eval(p, z)).collect::<Result<Vec<_>>>()?.iter().all(|&v| v == target.zero());
    if !f.is_hom() || !zero_ok || up.eval(q, z)? == target.zero() {
        return Err(Error::Bug("relative radical witness failed re-verification".into()));
    }
    Ok(json!({ "hom": hom_json(&f), "zero": named_point(target, &sys.names, z) }))
}

fn crad_cmd(s: &SystemArgs, q: &str, b: &Budget) -> Result<Outcome> {
    let sys = system(s)?;
    let q = parse_poly(q, &s.vars)?;
    let r = crad_member(&q, &sys.ideal, &sys.ctx, &sys.family, b)?;
    let witness = r.witness.as_ref().map(|w| crad_witness(&sys, &q, w)).transpose()?;
    ok(json!({
        "ring": sys.ctx.ring.to_string(),
        "family": sys.family.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "ideal": s.ideal,
        "q": q.to_string_with(&s.vars),
        "holds": r.holds,
        "homs_checked": r.homs_checked,
        "witness": witness,
    }))
}

fn gc_cmd(s: &SystemArgs, qs: &[String], b: &Budget) -> Result<Outcome> {
    let sys = system(s)?;
    let qs = polys(qs, &s.vars)?;
    let r = gc_check(&sys.ctx, &sys.family, &sys.ideal, &qs, b)?;
    let mut entries = Vec::new();
    for e in &r.entries {
        if sys.ctx.vanishes(&e.q, &r.zeros)? != e.vanishing {
            return Err(Error::Bug("vanishing verdict failed re-verification".into()));
        }
        let witness = e.crad_witness.as_ref().map(|w| crad_witness(&sys, &e.q, w)).transpose()?;
        entries.push(json!({
            "q": e.q.to_string_with(&s.vars),
            "vanishing": e.vanishing,
            "crad": e.crad,
            "agree": e.vanishing == e.crad,
            "witness": witness,
        }));
    }
    let zeros: Vec<Value> = r.zeros.iter().map(|z| named_point(&sys.ctx.ring, &s.vars, z)).collect();
    check(
        json!({
            "ring": sys.ctx.ring.to_string(),
            "family": sys.family.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "ideal": s.ideal,
            "zeros": zeros,
            "entries": entries,
            "consistent": r.consistent,
        }),
        r.consistent,
    )
}

fn theory_axioms(t: &TheoryArgs) -> Result<(String, Vec<Axiom>)> {
    if let Some(s) = &t.sentence {
        let ax = Axiom::from_sentence(&parse_sentence(s)?, Some("sentence".into()))?;
        return Ok(("sentence".into(), vec![ax]));
    }
    let src = t.theory.as_deref().ok_or_else(|| Error::invalid("a theory or sentence is required"))?;
    let th = match src.strip_prefix("builtin:") {
        Some(name) => builtin(name, t.bound)?,
        None => {
            let text =
                std::fs::read_to_string(src).map_err(|e| Error::invalid(format!("cannot read `{src}`: {e}")))?;
            parse_theory(&text)?
        }
    };
    let name = th.name.clone().unwrap_or_else(|| src.to_string());
    Ok((name, th.axioms(t.bound)?))
}

fn sat_cmd(r: &str, t: &TheoryArgs, verbose: bool, b: &Budget) -> Result<Outcome> {
    let r = ring(r)?;
    let (name, axioms) = theory_axioms(t)?;
    let mut rows = Vec::new();
    let mut first_failure = None;
    for ax in &axioms {
        let rep = satisfies(&r, ax, verbose, b)?;
        let witness = rep.witness.as_ref().map(|w| named_point(&r, &ax.pres.names, w));
        if first_failure.is_none() && !rep.holds {
            first_failure = Some((ax.label(), witness.clone()));
        }
        let mut row = json!({
            "axiom": ax.label(),
            "sentence": ax.to_string(),
            "holds": rep.holds,
            "witness": witness,
        });
        if let Some(rs) = &rep.realizers {
            row["realizers"] = rs
                .iter()
                .map(|(p, k)| json!({ "point": named_point(&r, &ax.pres.names, p), "member": k }))
                .collect();
        }
        rows.push(row);
    }
    let holds = first_failure.is_none();
    let (failed, witness) = first_failure.unzip();
    check(
        json!({
            "ring": r.to_string(),
            "theory": name,
            "bound": t.bound,
            "holds": holds,
            "failed_axiom": failed,
            "witness": witness.flatten(),
            "axioms": rows,
        }),
        holds,
    )
}

fn classify_cmd(t: &TheoryArgs, b: &Budget) -> Result<Outcome> {
    let (name, axioms) = theory_axioms(t)?;
    let rows: Vec<Value> = axioms
        .iter()
        .map(|ax| {
            let c = classify(ax, &b.groebner);
            json!({
                "axiom": ax.label(),
                "sentence": ax.to_string(),
                "universal": c.universal,
                "horn": c.horn,
                "negative": c.negative,
            })
        })
        .collect();
    ok(json!({ "theory": name, "bound": t.bound, "axioms": rows }))
}

fn resultant_cmd(n: &str, m: &str, family: &[String], b: &Budget) -> Result<Outcome> {
    let (n, m) = (morphism(n, b)?, morphism(m, b)?);
    let fam = rings(family)?;
    let r = resultant_member(&n, &m, &fam, b)?;
    let per: Vec<Value> = r
        .common
        .iter()
        .map(|(ring, c)| json!({ "ring": ring.to_string(), "common_point": c.as_ref().map(|p| pt_json(ring, p)) }))
        .collect();
    check(
        json!({
            "n": n.to_string(),
            "m": m.to_string(),
            "relative_to": fam.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "holds": r.holds,
            "per_ring": per,
        }),
        r.holds,
    )
}

fn cover_cmd(m: &str, xs: &[String], family: &[String], b: &Budget) -> Result<Outcome> {
    let m = morphism(m, b)?;
    let xs = xs.iter().map(|x| morphism(x, b)).collect::<Result<Vec<_>>>()?;
    let fam = rings(family)?;
    let r = complement_cover(&m, &xs, &fam, b)?;
    let per: Vec<Value> = r
        .per_ring
        .iter()
        .map(|c| {
            json!({
                "ring": c.ring.to_string(),
                "exact": c.exact,
                "uncovered": pts_json(&c.ring, &c.uncovered),
                "overlapping": pts_json(&c.ring, &c.overlapping),
            })
        })
        .collect();
    check(
        json!({
            "m": m.to_string(),
            "x": xs.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "relative_to": fam.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "exact": r.exact,
            "per_ring": per,
        }),
        r.exact,
    )
}

fn diamor_cmd(diagram: &str, pairs: &[String], targets: &[String], b: &Budget) -> Result<Outcome> {
    let d = load_diagram(diagram, b)?;
    let mut xs = Vec::with_capacity(pairs.len());
    for p in pairs {
        let (k, m) = p
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("pair `{p}` is not `<object>:<morphism>`")))?;
        let k: usize = k.trim().parse().map_err(|_| Error::invalid(format!("bad object index in `{p}`")))?;
        xs.push((morphism(m, b)?, k));
    }
    let axiom = change_of_basis(&xs, &d)?;
    let mut rows = Vec::new();
    let mut agree = true;
    for t in rings(targets)? {
        let r = diamor_check(&xs, &d, &t, b)?;
        agree &= r.agree;
        rows.push(json!({
            "ring": t.to_string(),
            "axiom_holds": r.axiom_holds,
            "cocones_realise": r.cocones_realise,
            "agree": r.agree,
            "cocones": r.cocones,
            "counter_cocone": r.counter_cocone.as_ref().map(|c| c.iter().map(|p| pt_json(&t, p)).collect::<Vec<_>>()),
        }));
    }
    check(
        json!({
            "apex": axiom.pres.to_string(),
            "axiom": axiom.to_string(),
            "targets": rows,
            "agree": agree,
        }),
        agree,
    )
}

fn rprod_cmd(
    family: &[String],
    gens: &[String],
    iso: Option<&str>,
    theory: Option<&str>,
    sentence: Option<&str>,
    bound: u32,
    b: &Budget,
) -> Result<Outcome> {
    let fam = rings(family)?;
    let index: Vec<usize> = (0..fam.len()).collect();
    let gens: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            g.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|_| Error::invalid(format!("bad index in `{g}`"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let filter = make_filter(&index, &gens)?;
    let rp = reduced_product(&fam, &filter)?;
    let col = colimit_check(&rp)?;
    let laws = filter.laws_hold();
    let mut holds = laws && col.isomorphic;
    let mut body = json!({
        "family": fam.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "s0": filter.min,
        "ultra": filter.is_ultra(),
        "filter_laws": laws,
        "carrier": rp.carrier.to_string(),
        "carrier_card": rp.carrier.card(),
        "colimit": { "classes": col.classes, "isomorphic": col.isomorphic },
    });
    if let Some(f) = rp.ultra_isomorphism()? {
        body["ultra_isomorphism"] = json!({ "factor": filter.min.iter().next(), "onto": f.cod.to_string(), "verified": true });
    }
    if let Some(spec) = iso {
        let other = ring(spec)?;
        let found = find_isomorphism(&other, &rp.carrier, b)?;
        if let Some(f) = &found {
            if !(f.is_hom() && f.injective && f.surjective) {
                return Err(Error::Bug("isomorphism failed re-verification".into()));
            }
        }
        holds &= found.is_some();
        body["isomorphism"] = json!({ "from": other.to_string(), "found": found.is_some(), "hom": found.as_ref().map(hom_json) });
    }
    if theory.is_some() || sentence.is_some() {
        let targs = TheoryArgs { theory: theory.map(String::from), sentence: sentence.map(String::from), bound };
        let (_, axioms) = theory_axioms(&targs)?;
        let mut rows = Vec::new();
        for ax in &axioms {
            let r = preservation_check(ax, &fam, &filter, b)?;
            if r.violation {
                return Err(Error::Bug(format!("{} is not preserved although it must be", ax.label())));
            }
            rows.push(json!({
                "axiom": ax.label(),
                "factors_model": r.factors_model,
                "product_models": r.product_models,
                "product_witness": r.product_witness.as_ref().map(|w| named_point(&rp.carrier, &ax.pres.names, w)),
                "preservation_expected": r.expected,
            }));
        }
        body["preservation"] = Value::Array(rows);
    }
    check(body, holds)
}

fn purity_cmd(from: &str, to: &str, k: usize, m: &str, pt: &str, b: &Budget) -> Result<Outcome> {
    let (a, bb) = (ring(from)?, ring(to)?);
    let hs = ring_homs(&a, &bb, b.max_hom_candidates)?;
    let f = hs
        .get(k)
        .ok_or_else(|| Error::invalid(format!("there are only {} homs {a} -> {bb}", hs.len())))?;
    let m = morphism(m, b)?;
    let p = point(&a, pt, m.dom.nvars())?;
    let r = purity_check(f, &m, &p, b)?;
    if !r.phrasings_agree() {
        return Err(Error::Bug("pure and existentially closed phrasings disagree".into()));
    }
    check(
        json!({
            "hom": hom_json(f),
            "morphism": m.to_string(),
            "point": pt_json(&a, &p),
            "image_in_exists": r.image_in_exists,
            "in_exists": r.in_exists,
            "pure_violation": r.pure_violation,
            "zeros_above": r.zeros_above,
            "zeros_below": r.zeros_below,
            "ec_violation": r.ec_violation,
        }),
        !r.pure_violation,
    )
}

fn member_cmd(m: &str, r: &str, pt: &str, b: &Budget) -> Result<Outcome> {
    let m = morphism(m, b)?;
    let r = ring(r)?;
    let p = point(&r, pt, m.dom.nvars())?;
    if !is_point(&m.dom, &r, &p)? {
        return Err(Error::invalid("the point does not satisfy the domain relations"));
    }
    let member = in_exists(&m, &r, &p, b)?;
    if member != exists_set(&m, &r, b)?.contains(&p) {
        return Err(Error::Bug("membership disagrees with the enumerated image".into()));
    }
    check(
        json!({
            "morphism": m.to_string(),
            "ring": r.to_string(),
            "point": pt_json(&r, &p),
            "member": member,
        }),
        member,
    )
}
