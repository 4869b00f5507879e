//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every tolerance here is exact equality of canonical cyclotomic forms
//! or exact integer equality; nothing is approximate.

use gvcalc_core::blocks::{
    acting_group_label, block_space, boundary_braiding, dimension_oracle, excision_check,
    handle_twist, rbr_action, CoendF,
};
use gvcalc_core::braid::relations::{check_rbr_relations, relation_instances, TermSampler};
use gvcalc_core::braid::terms::{tau_once_with, MorphismTerm, TAU_TABLE};
use gvcalc_core::braid::FramedBraid;
use gvcalc_core::cyclotomic::CycNumber;
use gvcalc_core::graphs::{build_graph, RibbonGraph};
use gvcalc_core::pointed::{
    make_cyclic_category, make_product_category, CrossTerm, CyclicFactor, Elem,
    PointedGVCategory,
};

fn pass(criterion: u32, what: &str) {
    println!("criterion {:02} ({}): PASS", criterion, what);
}

fn zeta8(k: i64) -> CycNumber {
    CycNumber::root_of_unity(8, k).unwrap()
}

/// The named category list used across the criteria. All groups have
/// order at most 8.
fn categories() -> Vec<(&'static str, PointedGVCategory)> {
    let product = |factors: &[(u64, i64)], cross: &[(usize, usize, i64)], h0: &[u64]| {
        let f: Vec<CyclicFactor> = factors
            .iter()
            .map(|&(order, q1_exponent)| CyclicFactor { order, q1_exponent })
            .collect();
        let c: Vec<CrossTerm> = cross
            .iter()
            .map(|&(i, j, exponent)| CrossTerm { i, j, exponent })
            .collect();
        make_product_category(&f, &c, h0).expect("standard cocycles validate")
    };
    vec![
        ("trivial", make_cyclic_category(1, 0, 0).unwrap()),
        ("Z2-semion", make_cyclic_category(2, 1, 0).unwrap()),
        ("Z2-fermion", make_cyclic_category(2, 2, 1).unwrap()),
        ("Z3", make_cyclic_category(3, 1, 0).unwrap()),
        ("Z3-shifted", make_cyclic_category(3, 1, 1).unwrap()),
        ("Z4-running", make_cyclic_category(4, 1, 1).unwrap()),
        ("Z4-plain", make_cyclic_category(4, 3, 0).unwrap()),
        ("Z5", make_cyclic_category(5, 1, 2).unwrap()),
        ("Z6", make_cyclic_category(6, 1, 1).unwrap()),
        ("Z7", make_cyclic_category(7, 2, 3).unwrap()),
        ("Z8", make_cyclic_category(8, 1, 1).unwrap()),
        ("Z2xZ2", product(&[(2, 1), (2, 1)], &[], &[0, 0])),
        ("Z2xZ2-cross", product(&[(2, 1), (2, 3)], &[(0, 1, 1)], &[1, 0])),
        ("Z2xZ4-cross", product(&[(2, 1), (4, 1)], &[(0, 1, 1)], &[0, 1])),
        ("Z2xZ2xZ2", product(&[(2, 1), (2, 1), (2, 3)], &[(0, 2, 1)], &[0, 1, 0])),
    ]
}

fn small_categories() -> Vec<(&'static str, PointedGVCategory)> {
    categories()
        .into_iter()
        .filter(|(_, c)| c.group().order() <= 4)
        .collect()
}

/// Criterion 4/5 list: trivial, two quadratic forms on Z/2, Z/3, the
/// running example, Z/2 × Z/2.
fn pivotal_list() -> Vec<(&'static str, PointedGVCategory)> {
    categories()
        .into_iter()
        .filter(|(name, _)| {
            matches!(
                *name,
                "trivial" | "Z2-semion" | "Z2-fermion" | "Z3" | "Z4-running" | "Z2xZ2"
            )
        })
        .collect()
}

#[test]
fn c01_ribbon_braid_relation_suite() {
    let rep = check_rbr_relations(4);
    assert!(rep.instances > 0);
    assert_eq!(rep.failures.len(), 0, "{:?}", rep.failures.first());
    pass(1, "(T1),(T2),(B1),(B2) and framed exchange at n <= 4");
}

#[test]
fn c02_cyclic_structure_suite() {
    // τ₂² = id on arity-1 morphisms, τ₃³ = id on arity-2 generator
    // morphisms
    let tau = |x: &MorphismTerm| tau_once_with(x, &TAU_TABLE).unwrap();
    for k in [-2i64, 1, 5] {
        let th = MorphismTerm::twist(1, 1, 2, k).unwrap();
        assert!(tau(&tau(&th)).flatten().equals(&th.flatten()));
    }
    let generators = [
        MorphismTerm::braiding_c(),
        MorphismTerm::braiding_c_bar(),
        MorphismTerm::braiding_c_inv(),
        MorphismTerm::braiding_c_bar_inv(),
        MorphismTerm::twist(2, 1, 2, 1).unwrap(),
        MorphismTerm::twist(2, 2, 3, 1).unwrap(),
        MorphismTerm::twist(2, 1, 3, 1).unwrap(),
    ];
    for g in &generators {
        assert!(tau(&tau(&tau(g))).flatten().equals(&g.flatten()));
    }

    // 100 random morphism terms of arity ≤ 3: full rotation is the
    // identity after flattening
    let mut sampler = TermSampler::new(0xACCE97);
    for i in 0..100 {
        let arity = 2 + (i % 2);
        let x = sampler.term(arity, 3 + i % 5);
        let mut y = x.clone();
        for _ in 0..=arity {
            y = tau(&y);
        }
        assert!(y.flatten().equals(&x.flatten()), "rotation order fails at sample {}", i);
    }

    // the transposition exchange τσ = στ²
    for g in &generators {
        let lhs = tau(&g.transposed().unwrap());
        let rhs = tau(&tau(g)).transposed().unwrap();
        assert_eq!(lhs.labels(), rhs.labels());
        assert!(lhs.flatten().equals(&rhs.flatten()));
    }

    // cyclic_act preserves (T1), (B1), (B2)
    for inst in relation_instances(4) {
        if !matches!(inst.axiom, "T1-left" | "T1-right" | "B1" | "B2") {
            continue;
        }
        let l = tau(&inst.lhs);
        let r = tau(&inst.rhs);
        assert!(
            l.flatten().equals(&r.flatten()),
            "{} not preserved at {:?}",
            inst.axiom,
            inst.witness
        );
    }
    pass(2, "cyclic structure: rotation orders, exchange, relation preservation");
}

#[test]
fn c03_lifting_condition_omega_cubed() {
    for (name, cat) in categories() {
        assert!(cat.group().order() <= 8);
        let rep = cat.check_pivotal_axioms();
        let omega_failures: Vec<_> = rep
            .failures
            .iter()
            .filter(|f| f.axiom == "omega-cubed")
            .collect();
        assert!(
            omega_failures.is_empty(),
            "Ω³ ≠ id for {}: {:?}",
            name,
            omega_failures.first()
        );
    }
    pass(3, "Ω³ = id exhaustively for all pointed categories with |G| <= 8");
}

#[test]
fn c04_pivotal_suite() {
    for (name, cat) in pivotal_list() {
        let piv = cat.check_pivotal_axioms();
        assert!(piv.passed(), "pivotal fails for {}: {:?}", name, piv.failures.first());
        let hex = cat.check_hexagon_h();
        assert!(hex.passed(), "hexagon (H) fails for {}: {:?}", name, hex.failures.first());
    }
    pass(4, "pivotal involution, cyclic triangle and hexagon (H)");
}

#[test]
fn c05_balanced_braided_suite() {
    for (name, cat) in pivotal_list() {
        let rep = cat.check_balanced_braided_axioms();
        assert!(rep.passed(), "balanced-braided fails for {}: {:?}", name, rep.failures.first());
    }
    pass(5, "balancing, (RT), (RB) and hexagons (B1),(B2)");
}

#[test]
fn c06_coend_dimension() {
    for (name, cat) in categories() {
        let f = CoendF::new(&cat);
        assert_eq!(
            f.dimension() as u64,
            cat.group().order(),
            "dim F != |G| for {}",
            name
        );
    }
    pass(6, "dim F = |G| for every test category");
}

#[test]
fn c07_closed_surface_dimensions() {
    let cat = make_cyclic_category(4, 1, 1).unwrap();
    let expected = [(1usize, 4usize), (2, 0), (3, 64)];
    for (genus, dim) in expected {
        let space = block_space(&cat, genus, &[]);
        assert_eq!(space.dimension(), dim, "genus {}", genus);
        assert_eq!(dimension_oracle(&cat, genus, &[]), dim, "oracle at genus {}", genus);
    }
    pass(7, "Z/4 closed-surface dimensions 4, 0, 64 with brute-force oracle");
}

#[test]
fn c08_dehn_twist_spectrum() {
    let cat = make_cyclic_category(4, 1, 1).unwrap();
    let v = block_space(&cat, 1, &[]);
    let tw = handle_twist(&cat, &v, 1).unwrap();
    let expected = [zeta8(0), zeta8(3), zeta8(0), zeta8(7)];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(tw.entry(i, i).unwrap(), e, "eigenvalue {}", i);
    }
    pass(8, "genus-1 handle twist eigenvalues (1, z8^3, 1, z8^7)");
}

#[test]
fn c09_excision_and_sewing() {
    for (name, cat) in small_categories() {
        let order = cat.group().order() as usize;
        for genus in 0..=2usize {
            for n in 0..=3usize {
                let tuples = order.pow(n as u32);
                for t in 0..tuples {
                    let mut labels: Vec<Elem> = Vec::with_capacity(n);
                    let mut idx = t;
                    for _ in 0..n {
                        labels.push(cat.group().element(idx % order));
                        idx /= order;
                    }
                    let rep = excision_check(&cat, genus, &labels);
                    assert!(
                        rep.passed(),
                        "excision fails for {} at g={} labels={:?}: {:?}",
                        name,
                        genus,
                        labels,
                        rep.failures.first()
                    );
                }
            }
        }
    }
    pass(9, "excision and sewing identities, g <= 2, n <= 3, |G| <= 4");
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn word(&mut self, strands: usize, len: usize) -> Vec<i32> {
        (0..len)
            .map(|_| {
                let i = 1 + self.below(strands - 1);
                if self.next() & 1 == 0 {
                    i as i32
                } else {
                    -(i as i32)
                }
            })
            .collect()
    }

    fn twists(&mut self, strands: usize) -> Vec<i64> {
        (0..strands).map(|_| self.below(5) as i64 - 2).collect()
    }
}

#[test]
fn c10_operator_soundness() {
    let cat = make_cyclic_category(4, 1, 1).unwrap();
    let mut rng = Rng(0x0B5E55ED);
    let relators: [&[i32]; 4] = [&[1, -1], &[-2, 2], &[1, 2, 1, -2, -1, -2], &[3, -3]];

    let mut equal_checked = 0;
    while equal_checked < 50 {
        let n = 2 + rng.below(3);
        let labels: Vec<Elem> = (0..n).map(|k| vec![k as u64 % 4]).collect();
        let space = block_space(&cat, 0, &labels);
        let twists = rng.twists(n);
        let len = 3 + rng.below(6);
        let word = rng.word(n, len);
        let a = FramedBraid::new(n, twists.clone(), word.clone());
        // insert a relator valid at this strand count
        let candidates: Vec<&[i32]> = relators
            .iter()
            .copied()
            .filter(|r| r.iter().all(|g| (g.unsigned_abs() as usize) < n))
            .collect();
        let relator = candidates[rng.below(candidates.len())];
        let mut word2 = word.clone();
        let at = rng.below(word2.len() + 1);
        for (k, &g) in relator.iter().enumerate() {
            word2.insert(at + k, g);
        }
        let b = FramedBraid::new(n, twists, word2);
        assert!(a.equals(&b));
        let op_a = rbr_action(&cat, &space, &a).unwrap();
        let op_b = rbr_action(&cat, &space, &b).unwrap();
        assert!(op_a.equals(&op_b), "equal braids must act equally");
        equal_checked += 1;
    }

    let mut unequal_checked = 0;
    while unequal_checked < 50 {
        let n = 2 + rng.below(3);
        // distinct labels so distinct permutations give distinct targets
        let labels: Vec<Elem> = (0..n).map(|k| vec![k as u64]).collect();
        let space = block_space(&cat, 0, &labels);
        let (ta, la) = (rng.twists(n), 2 + rng.below(5));
        let a = FramedBraid::new(n, ta, rng.word(n, la));
        let (tb, lb) = (rng.twists(n), 2 + rng.below(5));
        let b = FramedBraid::new(n, tb, rng.word(n, lb));
        if a.permutation() == b.permutation() {
            continue;
        }
        assert!(!a.equals(&b));
        let op_a = rbr_action(&cat, &space, &a).unwrap();
        let op_b = rbr_action(&cat, &space, &b).unwrap();
        assert!(
            !op_a.equals(&op_b),
            "distinct permutations must give typed-unequal operators"
        );
        assert_ne!(op_a.target().labels(), op_b.target().labels());
        unequal_checked += 1;
    }
    pass(10, "rbr_action factors through fb_equals on 50+50 random pairs");
}

/// The enumerated ribbon-graph family: at most 4 vertices, at most 2
/// loops, each with a choice of cyclic orders and leg labels.
fn ribbon_family() -> Vec<(&'static str, RibbonGraph)> {
    let mut out: Vec<(&'static str, RibbonGraph)> = Vec::new();
    out.push(("corolla-3", RibbonGraph::corolla(3)));

    // two 3-valent vertices joined by an edge (tree, 4 legs)
    let g = build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[(2, 3)]).unwrap();
    out.push((
        "two-vertex-tree",
        RibbonGraph::new(
            g,
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            vec![4],
            vec![(0, 0), (0, 1), (0, 2), (0, 3)],
        )
        .unwrap(),
    ));

    // path of three vertices (tree, 3 legs)
    let g = build_graph(&[&[0, 1], &[2, 3, 4], &[5, 6]], &[(1, 2), (4, 5)]).unwrap();
    out.push((
        "three-vertex-path",
        RibbonGraph::new(
            g,
            vec![vec![0, 1], vec![2, 4, 3], vec![5, 6]],
            vec![3],
            vec![(0, 0), (0, 2), (0, 1)],
        )
        .unwrap(),
    ));

    // star with four vertices (tree, 3 legs)
    let g = build_graph(&[&[0, 1, 2], &[3, 4], &[5, 6], &[7, 8]], &[(0, 3), (1, 5), (2, 7)])
        .unwrap();
    out.push((
        "four-vertex-star",
        RibbonGraph::new(
            g,
            vec![vec![0, 1, 2], vec![3, 4], vec![5, 6], vec![7, 8]],
            vec![3],
            vec![(0, 0), (0, 1), (0, 2)],
        )
        .unwrap(),
    ));

    // one loop at a single vertex with two legs
    let g = build_graph(&[&[0, 1, 2, 3]], &[(0, 1)]).unwrap();
    out.push((
        "loop-with-legs",
        RibbonGraph::new(g, vec![vec![0, 2, 1, 3]], vec![2], vec![(0, 0), (0, 1)]).unwrap(),
    ));

    // two vertices, two parallel edges (one loop), two legs
    let g = build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[(0, 3), (1, 4)]).unwrap();
    out.push((
        "bigon",
        RibbonGraph::new(
            g,
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            vec![2],
            vec![(0, 0), (0, 1)],
        )
        .unwrap(),
    ));

    // theta graph: two vertices, three parallel edges (two loops)
    let g = build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[(0, 3), (1, 4), (2, 5)]).unwrap();
    out.push((
        "theta",
        RibbonGraph::new(g, vec![vec![0, 1, 2], vec![3, 4, 5]], vec![0], vec![]).unwrap(),
    ));

    // two loops at one vertex with one leg
    let g = build_graph(&[&[0, 1, 2, 3, 4]], &[(0, 1), (2, 3)]).unwrap();
    out.push((
        "double-loop",
        RibbonGraph::new(g, vec![vec![0, 1, 2, 3, 4]], vec![1], vec![(0, 0)]).unwrap(),
    ));

    // two loop-vertices joined through a middle vertex (two loops)
    let g = build_graph(
        &[&[0, 1, 2], &[3, 4, 5, 6], &[7, 8, 9]],
        &[(0, 1), (2, 3), (6, 7), (8, 9)],
    )
    .unwrap();
    out.push((
        "dumbbell",
        RibbonGraph::new(
            g,
            vec![vec![0, 1, 2], vec![3, 4, 5, 6], vec![7, 8, 9]],
            vec![2],
            vec![(0, 0), (0, 1)],
        )
        .unwrap(),
    ));

    out
}

#[test]
fn c11_ribbon_graph_contraction_invariance() {
    use gvcalc_core::blocks::ribbon_graph_value;
    let cat = make_cyclic_category(4, 1, 1).unwrap();
    let order = cat.group().order() as usize;
    for (name, rg) in ribbon_family() {
        assert!(rg.graph().n_vertices() <= 4 && rg.loop_count() <= 2);
        let n = rg.target()[0];
        // a supported label tuple and an arbitrary one
        let tuples: Vec<Vec<Elem>> = (0..order.pow(n.min(2) as u32))
            .map(|mut idx| {
                let mut labels = Vec::with_capacity(n);
                for _ in 0..n {
                    labels.push(cat.group().element(idx % order));
                    idx /= order;
                }
                labels
            })
            .collect();
        for labels in tuples {
            let value = ribbon_graph_value(&cat, &rg, &labels).unwrap();
            assert_eq!(
                value.dimension(),
                block_space(&cat, rg.loop_count(), &labels).dimension(),
                "value dimension mismatch for {}",
                name
            );
            // contract every non-loop internal edge
            for (h, hp) in rg.graph().internal_edges() {
                if rg.graph().vertex_of(h) == rg.graph().vertex_of(hp) {
                    continue;
                }
                let contracted = rg.contract_edge(h).unwrap();
                let after = ribbon_graph_value(&cat, &contracted, &labels).unwrap();
                assert_eq!(value.dimension(), after.dimension(), "contraction changes {}", name);
                assert_eq!(value.genus(), after.genus());
            }
        }
    }
    pass(11, "ribbon-graph evaluation invariant under tree-edge contraction");
}

#[test]
fn c12_torus_caveat() {
    assert_eq!(acting_group_label(1, 0), "Aut(o_{1,0})");
    for (g, n) in [(0usize, 0usize), (0, 2), (1, 1), (2, 0), (3, 2)] {
        assert_eq!(acting_group_label(g, n), "Map(H_{g,n})");
    }
    // the reports carry the label through the CLI layer
    let text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("categories/z4-running.gvcat"),
    )
    .unwrap();
    let out = gvcalc::commands::cmd_twist_spectrum(
        &text,
        1,
        "",
        1,
        gvcalc::commands::Format::Json,
    )
    .unwrap();
    assert!(out.body.contains("Aut(o_{1,0})"));
    pass(12, "solid-torus reports name Aut(o_{1,0}) rather than the handlebody group");
}

#[test]
fn boundary_braiding_is_relation_sound_as_extra_coverage() {
    // operator hexagon: two routes of a double exchange agree
    let cat = make_cyclic_category(4, 1, 1).unwrap();
    let labels = [vec![1u64], vec![2], vec![3]];
    let v = block_space(&cat, 0, &labels);
    let one_move = rbr_action(&cat, &v, &FramedBraid::new(3, vec![0; 3], vec![1, 2])).unwrap();
    let b1 = boundary_braiding(&cat, &v, 1).unwrap();
    let b2 = boundary_braiding(&cat, b1.target(), 2).unwrap();
    assert!(one_move.equals(&b1.then(&b2).unwrap()));
}
