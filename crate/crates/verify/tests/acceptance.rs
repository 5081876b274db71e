//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use twotorus::formats::parse_table;
use twotorus::parse_polynomial;
use twotorus_core::cobordism::{
    brute_force_classes, generator_family, verify_table, CobordismSpace, Method, MonomialSpace,
};
use twotorus_core::dks::{self, localization_sum, SymmetricFunction};
use twotorus_core::polytope::{connected_sum_polynomial, enumerate_normalized_colorings, SimplexProduct};
use twotorus_core::{coloring_polynomial, d, find_primitive, is_squarefree, reduction, ColoredGraph, Polynomial, Side};

const LIMIT_DIM2: Duration = Duration::from_secs(1);
const LIMIT_DIM3: Duration = Duration::from_secs(5);
const LIMIT_DIM4: Duration = Duration::from_secs(60);
const LIMIT_TABLES: Duration = Duration::from_secs(30);
/// Random instances per property.
const CASES: usize = 300;
const DKS_DEGREE: u32 = 6;

const TABLE_N3: &str = include_str!("../../twotorus/data/table_n3.txt");
const TABLE_N4: &str = include_str!("../../twotorus/data/table_n4.txt");

const EXAMPLE_G: &str = "r1*r2*r3 + r1*r3*(r2+r3) + r1*r2*(r2+r3) + r1*(r1+r3)*(r1+r2) \
                         + r1*(r1+r3)*(r2+r3) + r1*(r1+r2)*(r2+r3)";
const EXAMPLE_GSTAR: &str = "s1*s2*s3 + s1*s2*(s2+s3) + s1*s3*(s2+s3) + s2*s3*(s1+s2+s3) \
                             + s2*(s2+s3)*(s1+s2+s3) + s3*(s2+s3)*(s1+s2+s3)";

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s of {}s", t.as_secs_f64(), limit.as_secs()))
}

fn dim2() -> Outcome {
    let start = Instant::now();
    let faithful = (1u32 << MonomialSpace::new(2).unwrap().len()) - 1;
    let classes = brute_force_classes(2).unwrap();
    let (fast, time) = within(LIMIT_DIM2, start);
    outcome(
        faithful == 7 && classes.len() == 1 && fast,
        format!("{} of {faithful} faithful polynomials are classes, {time}", classes.len()),
    )
}

fn dim3() -> Outcome {
    let start = Instant::now();
    let bases = twotorus_core::gf2::ordered_basis_count(3);
    let gens = CobordismSpace::compute(3, Method::Generators).unwrap();
    let polys = CobordismSpace::compute(3, Method::Polytopes).unwrap();
    let (fast, time) = within(LIMIT_DIM3, start);
    outcome(
        bases == 168 && gens.dim() == 13 && polys.dim() == 13 && gens.same_span(&polys) && fast,
        format!(
            "{bases} bases; generators {}, polytopes {}, same span {}, {time}",
            gens.dim(),
            polys.dim(),
            gens.same_span(&polys)
        ),
    )
}

fn dim4() -> Outcome {
    let start = Instant::now();
    let ambient = MonomialSpace::new(4).unwrap().len();
    let family = generator_family(4).unwrap();
    let space = CobordismSpace::compute(4, Method::Generators).unwrap();
    let (fast, time) = within(LIMIT_DIM4, start);
    outcome(
        ambient == 840 && space.dim() == 510 && fast,
        format!(
            "ambient {ambient}, {} distinct generators, dimension {} (expected 510), {time}",
            family.len(),
            space.dim()
        ),
    )
}

fn tables() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, text, rows_expected) in [(3, TABLE_N3, 13), (4, TABLE_N4, 510)] {
        let rows = parse_table(text, n).unwrap();
        let space = CobordismSpace::compute(n, Method::Generators).unwrap();
        let r = verify_table(n, &rows, &space).unwrap();
        pass &= r.count == rows_expected && r.independent && r.all_cycles && r.all_faithful && r.matches_dim_vn;
        parts.push(format!(
            "n={n}: {} rows, independent {}, span {} of {}, spans V{n}* {}",
            r.count,
            r.independent,
            r.span_dim,
            space.dim(),
            r.matches_dim_vn
        ));
    }
    let (fast, time) = within(LIMIT_TABLES, start);
    outcome(pass && fast, format!("{}; {time}", parts.join("; ")))
}

fn example_round_trip() -> Outcome {
    let g = parse_polynomial(EXAMPLE_G, Some(3), Side::Character).unwrap();
    let printed = parse_polynomial(EXAMPLE_GSTAR, Some(3), Side::Cocharacter).unwrap();
    let gstar = g.dual().unwrap();
    let same = gstar == printed && gstar.len() == 6;
    let cycle = d(&gstar).is_zero();
    let char_side = !d(&g).is_zero();
    outcome(same && cycle && char_side, format!("g* matches {same}, d(g*)=0 {cycle}, d(g)!=0 {char_side}"))
}

fn graph_ok(g: &Polynomial, vertices: usize) -> bool {
    let Ok(graph) = ColoredGraph::from_polynomial(g) else { return false };
    let n = g.dim();
    let loop_free = graph.edges().all(|e| e.u != e.v);
    let regular = (0..graph.vertex_count()).all(|v| graph.vertex_colors(v).len() == n);
    graph.validate().unwrap().is_valid()
        && loop_free
        && regular
        && graph.vertex_count() == vertices
        && graph.edge_count() * 2 == vertices * n
        && graph.coloring_polynomial() == *g
}

fn graphs() -> Outcome {
    let g = parse_polynomial(EXAMPLE_G, Some(3), Side::Character).unwrap();
    let example = graph_ok(&g, 6)
        && ColoredGraph::from_polynomial(&g).map(|x| (x.vertex_count(), x.edge_count())).ok() == Some((6, 9));
    let space = CobordismSpace::compute(3, Method::Generators).unwrap();
    let basis = space.basis_polynomials();
    let good = basis
        .iter()
        .filter(|b| {
            let g = b.dual().unwrap();
            graph_ok(&g, g.len())
        })
        .count();
    outcome(example && good == 13, format!("example 6 vertices 9 edges {example}; basis duals {good} of {}", basis.len()))
}

fn properties() -> Outcome {
    let mut failed: Vec<&str> = Vec::new();
    let mut check = |name: &'static str, ok: bool| {
        if !ok {
            failed.push(name);
        }
    };
    let sides = [Side::Character, Side::Cocharacter];
    let mut rng = rng(101);

    check(
        "d∘d",
        (0..CASES).all(|i| {
            let n = rng.random_range(1..=5);
            let (deg, terms) = (rng.random_range(0..=6), rng.random_range(0..8));
            d(&d(&random_polynomial(&mut rng, sides[i % 2], n, deg, terms))).is_zero()
        }),
    );
    check(
        "equivariance",
        (0..CASES).all(|i| {
            let n = rng.random_range(1..=5);
            let (deg, terms) = (rng.random_range(0..=5), rng.random_range(0..8));
            let p = random_polynomial(&mut rng, sides[i % 2], n, deg, terms);
            let s = random_automorphism(&mut rng, n);
            d(&p.apply_automorphism(&s).unwrap()) == d(&p).apply_automorphism(&s).unwrap()
        }),
    );
    check(
        "dual involution",
        (0..CASES).all(|i| {
            let n = rng.random_range(1..=6);
            let terms = rng.random_range(1..10);
            let g = random_faithful(&mut rng, sides[i % 2], n, terms);
            g.is_zero() || g.dual().and_then(|x| x.dual()).ok() == Some(g)
        }),
    );
    check(
        "primitive",
        (0..CASES).all(|i| {
            let n = rng.random_range(1..=5);
            let deg = rng.random_range(1..=(n + 1).min((1 << n) - 1));
            let terms = rng.random_range(1..6);
            let h = d(&random_squarefree(&mut rng, sides[i % 2], n, deg, terms));
            find_primitive(&h).map(|p| is_squarefree(&p) && d(&p) == h).unwrap_or(false)
        }),
    );
    let p22 = SimplexProduct::new(vec![2, 2]).unwrap();
    let normalized: Vec<_> = enumerate_normalized_colorings(&p22, 4).unwrap().collect();
    let s2 = SimplexProduct::simplex(2).unwrap();
    check(
        "product formula",
        (0..CASES).all(|_| {
            let lambda = &normalized[rng.random_range(0..normalized.len())];
            let (a, b) = lambda.colors().split_at(3);
            let l1 = twotorus_core::PolytopeColoring::new(4, a.to_vec()).unwrap();
            let l2 = twotorus_core::PolytopeColoring::new(4, b.to_vec()).unwrap();
            coloring_polynomial(&p22, lambda).unwrap()
                == coloring_polynomial(&s2, &l1).unwrap().multiply(&coloring_polynomial(&s2, &l2).unwrap()).unwrap()
        }),
    );
    let family3: Vec<Polynomial> = generator_family(3).unwrap().iter().map(|p| p.dual().unwrap()).collect();
    check(
        "connected sum",
        (0..CASES).all(|_| {
            let g1 = &family3[rng.random_range(0..family3.len())];
            let g2 = &family3[rng.random_range(0..family3.len())];
            let m1 = g1.terms().nth(rng.random_range(0..g1.len())).unwrap().clone();
            let m2 = g2.terms().nth(rng.random_range(0..g2.len())).unwrap().clone();
            let g2 = g2.apply_automorphism(&automorphism_between(m2.factors(), m1.factors())).unwrap();
            let a = ColoredGraph::from_polynomial(g1).unwrap();
            let b = ColoredGraph::from_polynomial(&g2).unwrap();
            let v1 = (0..a.vertex_count()).find(|&v| a.vertex_monomial(v) == m1).unwrap();
            let v2 = (0..b.vertex_count()).find(|&v| b.vertex_monomial(v) == m1).unwrap();
            let sum = a.connected_sum(v1, &b, v2).unwrap();
            let expected = g1.add(&g2).unwrap();
            sum.validate().unwrap().is_valid()
                && sum.coloring_polynomial() == expected
                && connected_sum_polynomial(g1, &g2).unwrap() == expected
        }),
    );
    check(
        "prime reduction",
        (0..CASES).all(|_| {
            let g1 = &family3[rng.random_range(0..family3.len())];
            let g2 = &family3[rng.random_range(0..family3.len())];
            let a = ColoredGraph::from_polynomial(g1).unwrap();
            let b = ColoredGraph::from_polynomial(g2).unwrap();
            let union = a.disjoint_union(&b).unwrap().disjoint_union(&a).unwrap();
            let reduced = union.prime_reduce();
            reduced.validate().unwrap().is_valid()
                && reduced.coloring_polynomial() == *g2
                && (reduced.vertex_count() == 0 || reduced.is_prime())
        }),
    );
    check(
        "Aut-stability",
        [2, 3, 4].iter().all(|&n| {
            let space = CobordismSpace::compute(n, Method::Generators).unwrap();
            (0..10).all(|_| space.is_stable_under(&random_automorphism(&mut rng, n)).unwrap())
        }),
    );
    let detail = if failed.is_empty() {
        format!("8 properties, {CASES} cases each (Aut-stability: 10 per n)")
    } else {
        format!("failed: {}", failed.join(", "))
    };
    outcome(failed.is_empty(), detail)
}

fn dks_checks() -> Outcome {
    let space = CobordismSpace::compute(3, Method::Generators).unwrap();
    let polynomial = space
        .basis_polynomials()
        .iter()
        .filter(|b| {
            let report = dks::check_up_to_degree(&b.dual().unwrap(), DKS_DEGREE).unwrap();
            !report.certified_nonmember && report.results.iter().all(|r| r.polynomial)
        })
        .count();
    let g = parse_polynomial("r1*r2", Some(2), Side::Character).unwrap();
    let certified = !localization_sum(&g, &SymmetricFunction::one(2).unwrap()).unwrap().is_polynomial();
    outcome(
        polynomial == 13 && certified,
        format!("basis duals polynomial through degree {DKS_DEGREE}: {polynomial} of 13; r1*r2 with f=1 certified {certified}"),
    )
}

fn reduction_identities() -> Outcome {
    let r = reduction::check().unwrap();
    outcome(r.holds(), format!("{r:?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dim V2 = 1 by brute force", dim2),
        ("dim V3 = 13 by generators and polytopes", dim3),
        ("dim V4 = 510, dim W4 = 840", dim4),
        ("tables parse, are independent and span", tables),
        ("example dual round trip", example_round_trip),
        ("graph construction", graphs),
        ("property suites", properties),
        ("localization cross-validation", dks_checks),
        ("reduction identities", reduction_identities),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} criterion {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failures += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
