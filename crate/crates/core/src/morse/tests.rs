use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bigraph::{
    build_modular_spec, template_edge_order, verify_sizeable, Backend, BlockId, BlockPair, ModularSpec, Side,
    SizeableInput,
};
use crate::cover::{build_voltage_cover, theta_split, VoltageCover};
use crate::cubeworld::{build_theta_cube, build_x_gamma};
use crate::simplicial::SimplicialComplex;
use crate::{Budget, Verdict};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn xg(n: u32) -> Family {
    Family::XGamma { n }
}

fn th(n: u32) -> Family {
    Family::Theta { n }
}

fn ch(f: Family, l: &[i64]) -> Character {
    Character::from_integers(f, l).unwrap()
}

fn pair(s: &str) -> BlockPair {
    s.parse().unwrap()
}

#[test]
fn edge_weights() {
    let l = ch(xg(2), &[1, 2]);
    assert_eq!(edge_weight(EdgeClass::Block(pair("A1+|B2+")), &l), q(3, 1));
    assert_eq!(edge_weight(EdgeClass::Block(pair("A1+|B1-")), &l), q(-1, 1));
    let t = ch(th(3), &[1, -1]);
    let x1 = EdgeClass::Theta(ThetaEdge { kind: ThetaKind::X, index: 1 });
    assert_eq!(edge_weight(x1, &t), q(0, 1));
}

#[test]
fn cmin_examples() {
    assert_eq!(compute_cmin(&ch(th(2), &[1])), q(1, 1));
    assert_eq!(compute_cmin(&ch(xg(2), &[1, -1])), q(1, 1));
    let third = Character::new(xg(1), vec![q(-2, 7)]).unwrap();
    assert_eq!(compute_cmin(&third), q(1, 1));
    assert_eq!(compute_cmin(&Character::new(xg(2), vec![q(3, 1), q(-1, 1)]).unwrap()), q(1, 3));
}

#[test]
fn characters_parse_and_normalize() {
    let l = Character::parse(xg(3), "1,-2/3,0").unwrap();
    assert_eq!(l.lambda(), &[q(1, 1), q(-2, 3), q(0, 1)]);
    let l = Character::parse(xg(2), "0, -4").unwrap();
    assert_eq!(l.lambda(), &[q(0, 1), q(-1, 1)]);
    assert_eq!(Character::parse(xg(2), "0,0"), Err(CharacterError::Zero));
    assert!(matches!(Character::parse(xg(2), "1"), Err(CharacterError::WrongLength { .. })));
    assert!(matches!(Character::parse(xg(1), "1/0"), Err(CharacterError::Parse(_))));
    assert_eq!(Character::parse(th(1), "1"), Err(CharacterError::BadRank));
}

/// Sign vectors met on an integer grid.
fn grid_sign_vectors(family: Family, radius: i64) -> BTreeSet<Vec<i8>> {
    let d = family.dim();
    let mut out = BTreeSet::new();
    let mut point = vec![-radius; d];
    loop {
        if point.iter().any(|&x| x != 0) {
            out.insert(ch(family, &point).sign_vector());
        }
        let mut i = 0;
        while i < d && point[i] == radius {
            point[i] = -radius;
            i += 1;
        }
        if i == d {
            return out;
        }
        point[i] += 1;
    }
}

#[test]
fn chamber_counts() {
    let x1 = enumerate_chambers(xg(1)).unwrap();
    assert_eq!(x1.iter().map(|c| c.sign_string()).collect::<Vec<_>>(), ["+", "-"]);
    assert_eq!(enumerate_chambers(xg(2)).unwrap().len(), 12);
    assert_eq!(enumerate_chambers(th(2)).unwrap().len(), 2);
    assert!(matches!(enumerate_chambers(xg(5)), Err(ChamberError::RankTooLarge(5))));
}

#[test]
fn chambers_match_grid_oracle() {
    for (family, radius) in [(xg(1), 2), (xg(2), 3), (xg(3), 3), (xg(4), 5), (th(2), 2), (th(3), 3), (th(4), 4)] {
        let chambers = enumerate_chambers(family).unwrap();
        let found: BTreeSet<Vec<i8>> = chambers.iter().map(|c| c.signs.clone()).collect();
        assert_eq!(found.len(), chambers.len(), "{family:?}: duplicate sign vectors");
        assert_eq!(found, grid_sign_vectors(family, radius), "{family:?}");
        for c in &chambers {
            assert_eq!(c.representative.sign_vector(), c.signs);
            let lead = c.representative.lambda().iter().find(|x| *x != &q(0, 1)).unwrap();
            assert!(lead == &q(1, 1) || lead == &q(-1, 1));
        }
    }
    // Frozen from the grid oracle.
    let counts: Vec<usize> =
        [xg(3), xg(4), th(3), th(4)].iter().map(|f| enumerate_chambers(*f).unwrap().len()).collect();
    assert_eq!(counts, [86, 804, 12, 50]);
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    if rng.gen_bool(0.3) {
        return q(0, 1);
    }
    q(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

#[test]
fn chamber_completeness_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let families = [xg(1), xg(2), xg(3), xg(4), th(2), th(3), th(4)];
    let tables: Vec<Vec<SignChamber>> = families.iter().map(|f| enumerate_chambers(*f).unwrap()).collect();
    let mut samples = 0;
    while samples < 10_000 {
        let k = rng.gen_range(0..families.len());
        let f = families[k];
        let lambda: Vec<BigRational> = (0..f.dim()).map(|_| random_rational(&mut rng)).collect();
        let Ok(l) = Character::new(f, lambda) else { continue };
        let hits = tables[k].iter().filter(|c| c.signs == l.sign_vector()).count();
        assert_eq!(hits, 1, "{l}");
        samples += 1;
    }
}

fn link_names(x: &crate::cubeworld::ProductCubeComplex, link: &SimplicialComplex<crate::cubeworld::LinkVertexLabel>, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&i| x.link_vertex_name(link.label(i))).collect()
}

#[test]
fn theta_split_at_origin() {
    let x = build_theta_cube(2).unwrap();
    let l = ch(th(2), &[1]);
    let link = x.vertex_link([0, 0, 0]).unwrap();
    let w = link_weights(&x, [0, 0, 0], &link, &l).unwrap();
    let split = living_dead_split(&link, &w);
    assert!(split.dead_vertices.is_empty());
    let up = link_names(&x, &link, &split.ascending_vertices);
    let down = link_names(&x, &link, &split.descending_vertices);
    for f in 1..=3 {
        let pick = |v: &[String]| -> Vec<String> {
            v.iter().filter(|s| s.starts_with(&alloc::format!("f{f}:"))).map(|s| s[3..].into()).collect()
        };
        assert_eq!(pick(&up), ["x1", "x2"]);
        assert_eq!(pick(&down), ["y1", "y2"]);
    }
    // At vertex 1 the roles swap.
    let w1 = link_weights(&x, [1, 1, 1], &x.vertex_link([1, 1, 1]).unwrap(), &l).unwrap();
    assert_eq!(split::signs(&w1), split::signs(&w).iter().map(|s| -s).collect::<Vec<_>>());
}

#[test]
fn xgamma_dead_classes_follow_block_indices() {
    let spec = build_modular_spec(2, Some(5)).unwrap();
    let g = spec.realize(&Budget::default()).unwrap();
    let x = build_x_gamma(&g);
    let l = ch(xg(2), &[1, 0]);
    let mut seen_dead = false;
    for (t, v) in x.type_representatives() {
        if t.iter().any(|b| b.side != Side::A) {
            continue;
        }
        let link = x.vertex_link(v).unwrap();
        let w = link_weights(&x, v, &link, &l).unwrap();
        for (i, lab) in link.labels().iter().enumerate() {
            let from = t[lab.factor as usize];
            let to = x.block_of(lab.target).unwrap();
            assert_eq!(w[i] == q(0, 1), from.index == 2 && to.index == 2, "{t:?} {lab:?}");
            seen_dead |= w[i] == q(0, 1);
        }
    }
    assert!(seen_dead);
}

fn modular_instance_parts(spec: &ModularSpec) -> (crate::cubeworld::ProductCubeComplex, Option<SymbolicModel>) {
    let g = spec.realize(&Budget::default()).unwrap();
    let rep = verify_sizeable(SizeableInput::Graph(&g), Backend::Explicit).unwrap();
    let model = SymbolicModel::for_graph(&g, &rep).ok();
    (build_x_gamma(&g), model)
}

fn run(instance: &Instance<'_>, engine: Engine, chars: &[(String, Character)]) -> VerificationReport {
    check_theorem_hypotheses(instance, engine, chars, &CheckOptions::default()).unwrap()
}

#[test]
fn modular_rank_one_passes_with_both_engines() {
    for p in [5u128, 19] {
        let spec = build_modular_spec(1, Some(p)).unwrap();
        let (x, model) = modular_instance_parts(&spec);
        let model = model.expect("spans are certified");
        let inst = Instance::XGamma { n: 1, complex: Some(&x), model: Some(&model) };
        let chars = chamber_characters(xg(1)).unwrap();
        let e = run(&inst, Engine::Explicit, &chars);
        let s = run(&inst, Engine::Symbolic, &chars);
        assert_eq!(e.verdict, Verdict::Pass, "p={p} {:?}", e.first_issue());
        assert_eq!(e.homological, Verdict::Pass);
        assert_eq!(s.verdict, Verdict::Pass, "p={p} {:?}", s.first_issue());
        assert!(engine_disagreements(&e, &s).is_empty());
        assert_eq!(e.chambers[0].vertex_types.len(), 64);
        assert_eq!(s.chambers[0].vertex_types.len(), 64);
        // Arithmetic certificate gives the same block model.
        let arep = verify_sizeable(SizeableInput::Spec(&spec), Backend::Arithmetic).unwrap();
        let amodel = SymbolicModel::for_spec(&spec, &arep).unwrap();
        assert_eq!(amodel, model);
    }
}

fn constant_spec(n: u32, p: u128) -> ModularSpec {
    let order = template_edge_order(n);
    let sigma = order.iter().map(|b| (*b, vec![0u128])).collect();
    ModularSpec::new(n, p, order, sigma).unwrap()
}

#[test]
fn constant_residues_pass_at_rank_one() {
    // No dead classes at rank one: every mixed link is a cone over one
    // living neighbour, so even matching spans pass.
    let spec = constant_spec(1, 5);
    let (x, model) = modular_instance_parts(&spec);
    assert!(model.is_none());
    let inst = Instance::XGamma { n: 1, complex: Some(&x), model: None };
    let chars = chamber_characters(xg(1)).unwrap();
    assert_eq!(run(&inst, Engine::Explicit, &chars).verdict, Verdict::Pass);
    let err = check_theorem_hypotheses(&inst, Engine::Symbolic, &chars, &CheckOptions::default());
    assert_eq!(err.unwrap_err(), MorseError::MissingCertificate);
}

#[test]
fn constant_residues_fail_at_rank_two() {
    let spec = constant_spec(2, 5);
    let (x, _) = modular_instance_parts(&spec);
    let inst = Instance::XGamma { n: 2, complex: Some(&x), model: None };
    let chars = chamber_characters(xg(2)).unwrap();
    let r = run(&inst, Engine::Explicit, &chars);
    assert_eq!(r.verdict, Verdict::Fail);
    let disconnected_dead_vertex = r.chambers.iter().flat_map(|c| &c.vertex_types).flat_map(|t| &t.issues).any(|i| {
        i.sigma.len() == 1
            && i.direction == Direction::Ascending
            && i.verdict == Verdict::Fail
            && matches!(&i.witness, Some(Witness::Components(c)) if c.len() > 1)
    });
    assert!(disconnected_dead_vertex);
    // Γ is a disjoint union of complete bipartite pieces, so even chambers
    // without dead classes fail on H1 of the ascending link.
    assert!(r.chambers.iter().all(|c| c.verdict == Verdict::Fail));
    let homology = r.chambers.iter().flat_map(|c| &c.vertex_types).flat_map(|t| &t.issues).any(|i| {
        i.sigma.is_empty() && matches!(&i.witness, Some(Witness::Homology { rank, .. }) if *rank > 0)
    });
    assert!(homology);
}

#[test]
fn modular_rank_two_symbolic_passes_every_chamber() {
    for spec in [build_modular_spec(2, None).unwrap(), build_modular_spec(3, None).unwrap()] {
        let rep = verify_sizeable(SizeableInput::Spec(&spec), Backend::Arithmetic).unwrap();
        let model = SymbolicModel::for_spec(&spec, &rep).unwrap();
        let n = spec.rank();
        let inst = Instance::XGamma { n, complex: None, model: Some(&model) };
        let chars = chamber_characters(xg(n)).unwrap();
        let r = run(&inst, Engine::Symbolic, &chars);
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.first_issue());
        assert_eq!(r.chambers[0].vertex_types.len(), (4 * n as usize).pow(3));
    }
}

#[test]
fn theta_family_passes_with_both_engines() {
    for (n, p) in [(2, 5), (3, 7)] {
        let cover = build_voltage_cover(n, p).unwrap();
        let inst = Instance::Theta { cover: &cover };
        let chars = chamber_characters(th(n)).unwrap();
        let e = run(&inst, Engine::Explicit, &chars);
        let s = run(&inst, Engine::Symbolic, &chars);
        assert_eq!(e.verdict, Verdict::Pass, "{:?}", e.first_issue());
        assert_eq!(s.verdict, Verdict::Pass, "{:?}", s.first_issue());
        assert!(engine_disagreements(&e, &s).is_empty());
        assert_eq!(e.chambers[0].vertex_types.len(), 14);
    }
}

#[test]
fn theta_rank_three_degenerate_chambers_have_dead_simplices() {
    let cover = build_voltage_cover(3, 7).unwrap();
    let inst = Instance::Theta { cover: &cover };
    for lambda in [&[0, 1][..], &[1, -1]] {
        let l = ch(th(3), lambda);
        let r = check_chamber(&inst, Engine::Symbolic, sign_label(&l), &l, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.vertex_types.iter().all(|t| t.dead_simplices > 1));
    }
}

#[test]
fn zero_voltage_cover_fails() {
    let cover = VoltageCover::zero(2, 5).unwrap();
    let inst = Instance::Theta { cover: &cover };
    let l = ch(th(2), &[1]);
    for engine in [Engine::Explicit, Engine::Symbolic] {
        let r = check_chamber(&inst, engine, sign_label(&l), &l, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let t2: Vec<&VertexTypeReport> = r.vertex_types.iter().filter(|t| t.vertex_type.starts_with("type2")).collect();
        assert!(t2.iter().all(|t| t.verdict == Verdict::Fail));
        assert!(r.vertex_types.iter().filter(|t| t.vertex_type.starts_with("type1")).all(|t| t.verdict.is_pass()));
    }
}

#[test]
fn theta_two_ascending_and_two_descending_edges_per_factor() {
    for n in 2..=4 {
        for c in enumerate_chambers(th(n)).unwrap() {
            for at in 0..2 {
                let split = theta_split(&c.representative, n, at);
                assert!(split.get(&1).map_or(0, Vec::len) >= 2, "n={n} {}", c.sign_string());
                assert!(split.get(&-1).map_or(0, Vec::len) >= 2, "n={n} {}", c.sign_string());
            }
        }
    }
}

#[test]
fn unsupported_targets_and_mismatches() {
    let cover = build_voltage_cover(2, 5).unwrap();
    let inst = Instance::Theta { cover: &cover };
    let l = ch(th(2), &[1]);
    let opts = CheckOptions { m: 2, ..CheckOptions::default() };
    assert_eq!(check_chamber(&inst, Engine::Explicit, String::new(), &l, &opts).unwrap_err(), MorseError::UnsupportedTarget(2));
    let wrong = ch(th(3), &[1, 1]);
    assert_eq!(
        check_chamber(&inst, Engine::Explicit, String::new(), &wrong, &CheckOptions::default()).unwrap_err(),
        MorseError::FamilyMismatch
    );
    let m0 = CheckOptions { m: 0, ..CheckOptions::default() };
    assert!(check_chamber(&inst, Engine::Symbolic, String::new(), &l, &m0).unwrap().verdict.is_pass());
}

/// Random points of the relatively open cone of a chamber: positive
/// combinations of grid points with the same sign vector.
fn points_in_chamber(c: &SignChamber, count: usize, rng: &mut ChaCha8Rng) -> Vec<Character> {
    let f = c.family();
    let d = f.dim();
    let mut grid = Vec::new();
    let r = 4i64;
    let total = (2 * r + 1).pow(d as u32);
    for idx in 0..total {
        let mut k = idx;
        let p: Vec<i64> = (0..d)
            .map(|_| {
                let v = k % (2 * r + 1) - r;
                k /= 2 * r + 1;
                v
            })
            .collect();
        if p.iter().any(|&x| x != 0) && ch(f, &p).sign_vector() == c.signs {
            grid.push(p);
        }
    }
    assert!(!grid.is_empty());
    (0..count)
        .map(|_| {
            let mut acc = vec![q(0, 1); d];
            for _ in 0..3 {
                let p = &grid[rng.gen_range(0..grid.len())];
                let w = q(rng.gen_range(1..=20), rng.gen_range(1..=7));
                for i in 0..d {
                    acc[i] += &w * q(p[i], 1);
                }
            }
            let l = Character::new(f, acc).unwrap();
            assert_eq!(l.sign_vector(), c.signs);
            l
        })
        .collect()
}

fn assert_sufficient(inst: &Instance<'_>, engine: Engine, family: Family, per_chamber: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = CheckOptions::default();
    for c in enumerate_chambers(family).unwrap() {
        let base = check_chamber(inst, engine, c.sign_string(), &c.representative, &opts).unwrap();
        for l in points_in_chamber(&c, per_chamber, &mut rng) {
            let other = check_chamber(inst, engine, c.sign_string(), &l, &opts).unwrap();
            assert_eq!(other.vertex_types, base.vertex_types, "{} vs {l}", c.representative);
        }
    }
}

#[test]
fn verdicts_depend_only_on_the_chamber() {
    let spec = build_modular_spec(1, Some(5)).unwrap();
    let (x, model) = modular_instance_parts(&spec);
    let model = model.unwrap();
    let inst = Instance::XGamma { n: 1, complex: Some(&x), model: Some(&model) };
    assert_sufficient(&inst, Engine::Explicit, xg(1), 100, 1);
    assert_sufficient(&inst, Engine::Symbolic, xg(1), 100, 2);

    let spec2 = build_modular_spec(2, None).unwrap();
    let rep = verify_sizeable(SizeableInput::Spec(&spec2), Backend::Arithmetic).unwrap();
    let model2 = SymbolicModel::for_spec(&spec2, &rep).unwrap();
    let inst2 = Instance::XGamma { n: 2, complex: None, model: Some(&model2) };
    assert_sufficient(&inst2, Engine::Symbolic, xg(2), 100, 3);

    let cover = build_voltage_cover(2, 5).unwrap();
    let inst3 = Instance::Theta { cover: &cover };
    assert_sufficient(&inst3, Engine::Explicit, th(2), 100, 4);
    let cover3 = build_voltage_cover(3, 7).unwrap();
    let inst4 = Instance::Theta { cover: &cover3 };
    assert_sufficient(&inst4, Engine::Symbolic, th(3), 100, 5);
}

#[test]
fn dead_links_are_full() {
    let theta = build_theta_cube(2).unwrap();
    let b = Budget::default();
    assert_eq!(check_dead_links_full(&theta, &ch(th(2), &[1]), true, &b).unwrap().0, Verdict::Pass);
    let theta3 = build_theta_cube(3).unwrap();
    assert_eq!(check_dead_links_full(&theta3, &ch(th(3), &[1, -1]), true, &b).unwrap().0, Verdict::Pass);
    let spec = build_modular_spec(2, Some(5)).unwrap();
    let g = spec.realize(&b).unwrap();
    let x = build_x_gamma(&g);
    assert_eq!(check_dead_links_full(&x, &ch(xg(2), &[1, 0]), false, &b).unwrap().0, Verdict::Pass);
}

#[test]
fn hand_built_link_violating_fullness() {
    let link: SimplicialComplex<u8> = SimplicialComplex::new(vec![0, 1, 2, 3], [vec![0, 1, 2], vec![2, 3]]).unwrap();
    // The three dead vertices span a triangle, but the flat part stops at
    // its edges.
    let weights = [q(0, 1), q(0, 1), q(0, 1), q(1, 1)];
    let mut flat = flat_simplices(&link, &weights);
    assert!(link.is_full_subcomplex(&flat));
    flat.remove(&vec![0, 1, 2]);
    assert_eq!(link.fullness_violation(&flat), Some(vec![0, 1, 2]));
}

#[test]
fn check_link_on_small_complexes() {
    // Square with one dead corner: the living link of the dead vertex is its
    // two neighbours, disconnected.
    let link: SimplicialComplex<u8> =
        SimplicialComplex::new(vec![0, 1, 2, 3], [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
    let weights = [q(0, 1), q(1, 1), q(1, 1), q(1, 1)];
    let out = check_link(&link, &weights, 1, "v", &|i| alloc::format!("{i}"));
    assert_eq!(out.dead_simplices, 2);
    let fail = out.checks.iter().find(|c| c.sigma == ["0"] && c.direction == Direction::Ascending).unwrap();
    assert_eq!(fail.verdict, Verdict::Fail);
    assert_eq!(fail.witness, Some(Witness::Components(vec![vec!["1".into()], vec!["3".into()]])));
    // The descending side is empty everywhere.
    let empty = out.checks.iter().find(|c| c.sigma.is_empty() && c.direction == Direction::Descending).unwrap();
    assert_eq!(empty.witness, Some(Witness::Empty));
}

fn random_character(family: Family) -> impl Strategy<Value = Character> {
    prop::collection::vec(-5i64..=5, family.dim())
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(move |v| ch(family, &v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn splits_are_scale_invariant(l in random_character(xg(2)), num in 1i64..50, den in 1i64..50, t in 0usize..512) {
        let spec = build_modular_spec(2, Some(5)).unwrap();
        let g = spec.realize(&Budget::default()).unwrap();
        let x = build_x_gamma(&g);
        let reps = x.type_representatives();
        let (_, v) = reps[t % reps.len()];
        let link = x.vertex_link(v).unwrap();
        let mu = q(num, den);
        let scaled = Character::new(l.family(), l.lambda().iter().map(|a| a * &mu).collect()).unwrap();
        prop_assert_eq!(&scaled, &l);
        let w = link_weights(&x, v, &link, &l).unwrap();
        let ws: Vec<BigRational> = w.iter().map(|a| a * &mu).collect();
        prop_assert_eq!(living_dead_split(&link, &w), living_dead_split(&link, &ws));
        let neg = link_weights(&x, v, &link, &l.negated()).unwrap();
        let (a, b) = (living_dead_split(&link, &w), living_dead_split(&link, &neg));
        prop_assert_eq!(&a.ascending, &b.descending);
        prop_assert_eq!(&a.descending, &b.ascending);
        prop_assert_eq!(&a.dead, &b.dead);
    }

    #[test]
    fn theta_splits_are_scale_invariant(l in random_character(th(3)), num in 1i64..50, den in 1i64..50, v in 0usize..8) {
        let x = build_theta_cube(3).unwrap();
        let v = [v >> 2 & 1, v >> 1 & 1, v & 1];
        let link = x.vertex_link(v).unwrap();
        let mu = q(num, den);
        let w = link_weights(&x, v, &link, &l).unwrap();
        let ws: Vec<BigRational> = w.iter().map(|a| a * &mu).collect();
        prop_assert_eq!(living_dead_split(&link, &w), living_dead_split(&link, &ws));
        let neg = link_weights(&x, v, &link, &l.negated()).unwrap();
        prop_assert_eq!(living_dead_split(&link, &w).ascending, living_dead_split(&link, &neg).descending);
    }

    #[test]
    fn dead_links_full_on_small_graphs(seed in any::<u64>(), l in random_character(xg(2))) {
        // One vertex per block plus a few extras, random edges.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks_a: Vec<BlockId> = BlockId::all(Side::A, 2).collect();
        let blocks_b: Vec<BlockId> = BlockId::all(Side::B, 2).collect();
        let mut blocks = BTreeMap::new();
        for (i, b) in blocks_a.iter().enumerate() {
            blocks.insert(*b, vec![i]);
        }
        for (i, b) in blocks_b.iter().enumerate() {
            blocks.insert(*b, vec![i]);
        }
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let names = |p: &str| (0..4).map(|i| alloc::format!("{p}{i}")).collect::<Vec<String>>();
        let g = crate::bigraph::MorseGraph::from_parts(2, names("a"), names("b"), blocks, edges).unwrap();
        let x = build_x_gamma(&g);
        prop_assert_eq!(check_dead_links_full(&x, &l, true, &Budget::default()).unwrap().0, Verdict::Pass);
    }

    #[test]
    fn engines_agree_on_random_rank_one_specs(r in prop::collection::vec((0u128..23, 1u128..22), 4), pi in 0usize..4) {
        let p = [7u128, 11, 13, 23][pi];
        let order = template_edge_order(1);
        let sigma = order.iter().zip(&r).map(|(b, &(s, d))| (*b, vec![s % p, (s + d % (p - 1) + 1) % p])).collect();
        let spec = ModularSpec::new(1, p, order, sigma).unwrap();
        let (x, model) = modular_instance_parts(&spec);
        let model = model.unwrap();
        let inst = Instance::XGamma { n: 1, complex: Some(&x), model: Some(&model) };
        let chars = chamber_characters(xg(1)).unwrap();
        let e = run(&inst, Engine::Explicit, &chars);
        let s = run(&inst, Engine::Symbolic, &chars);
        prop_assert!(engine_disagreements(&e, &s).is_empty());
        prop_assert_eq!(e.verdict, Verdict::Pass);
    }
}
