use gmdn::arith::{root_of_unity_sum, CycloNum, LaurentPoly, Rat};
use gmdn::cm::{
    cm_partition_k, cm_partition_k_generic, cm_partition_w, irr_labels, is_d_stuttering,
    orbit_and_stabilizer,
};
use gmdn::groups::{count_conjugacy_classes, enumerate_group, reflections, DEFAULT_GROUP_LIMIT};
use gmdn::params::{integerize, is_p_cyclic, ParamsH, ShiftData};
use gmdn::partitions::{enumerate_multipartitions, GroupParams, MultiPartition, Partition};
use gmdn::verify::content_multiset_partition;

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn gp(m: u32, d: u32, n: u32) -> GroupParams {
    GroupParams::new(m, d, n).unwrap()
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn index(labels: &[MultiPartition], s: &str) -> usize {
    labels.iter().position(|l| *l == mp(s)).unwrap()
}

#[test]
fn laurent_examples() {
    assert_eq!(lp(&[(0, 1)]).shift(3), lp(&[(3, 1)]));
    assert_eq!(lp(&[(-1, 1), (1, 1)]).add(&lp(&[(1, -1)])), lp(&[(-1, 1)]));
    assert_eq!(
        lp(&[(0, 1), (1, 1)]).mul(&lp(&[(0, 1), (1, -1)])),
        lp(&[(0, 1), (2, -1)])
    );
    let p = lp(&[(-1, 1), (0, 2), (1, 1)]);
    assert_eq!(p.substitute_power(3), lp(&[(-3, 1), (0, 2), (3, 1)]));
    assert_eq!(p.substitute_power(1), p);
}

#[test]
fn cyclotomic_examples() {
    let z4 = CycloNum::zeta_pow(4, 1);
    assert_eq!(
        z4.mul(&z4).unwrap(),
        CycloNum::from_rat(4, Rat::from_int(-1))
    );
    let sum = CycloNum::one(3)
        .add(&CycloNum::zeta_pow(3, 1))
        .unwrap()
        .add(&CycloNum::zeta_pow(3, 2))
        .unwrap();
    assert!(sum.is_zero());
    assert_eq!(CycloNum::zeta_pow(5, 5), CycloNum::one(5));

    let one_minus = |m: u32| {
        CycloNum::one(m)
            .sub(&CycloNum::zeta_pow(m, 1))
            .unwrap()
            .norm()
    };
    assert_eq!(one_minus(2), Rat::from_int(2));
    assert_eq!(one_minus(6), Rat::one());
    assert_eq!(one_minus(4), Rat::from_int(2));

    assert!(root_of_unity_sum(2, &[0, 1], &[Rat::one(), Rat::one()])
        .unwrap()
        .is_zero());
    assert_eq!(
        root_of_unity_sum(3, &[0, 0], &[r(1, 2), r(1, 2)]).unwrap(),
        CycloNum::one(3)
    );
    assert!(root_of_unity_sum(4, &[1, 3], &[Rat::one(), Rat::one()])
        .unwrap()
        .is_zero());
}

#[test]
fn partition_examples() {
    assert_eq!(
        Partition::new(vec![2, 1]).young_nodes(),
        vec![(1, 1), (1, 2), (2, 1)]
    );
    assert!(Partition::empty().young_nodes().is_empty());
    let big = Partition::new(vec![3, 2, 2, 1]);
    assert_eq!(big.young_nodes().len(), 8);
    assert_eq!(Partition::new(vec![1]).residue(), lp(&[(0, 1)]));
    assert_eq!(
        Partition::new(vec![2, 1]).residue(),
        lp(&[(-1, 1), (0, 1), (1, 1)])
    );
    assert_eq!(
        big.residue(),
        lp(&[(-3, 1), (-2, 1), (-1, 2), (0, 2), (1, 1), (2, 1)])
    );

    assert_eq!(mp("(1|)").shifted_residue(&[0, 0]).unwrap(), lp(&[(0, 1)]));
    assert_eq!(
        mp("(1|1)").shifted_residue(&[0, 5]).unwrap(),
        lp(&[(0, 1), (5, 1)])
    );
    for l in enumerate_multipartitions(3, 4) {
        assert_eq!(l.shifted_residue(&[4, -7, 2]).unwrap().eval_at_one(), 4);
    }

    assert_eq!(enumerate_multipartitions(1, 3).len(), 3);
    assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
    assert_eq!(enumerate_multipartitions(3, 3).len(), 22);
    assert_eq!(mp("(1|1)").dim_wreath_irrep(), 2);
    assert_eq!(mp("(5)").dim_wreath_irrep(), 1);
}

#[test]
fn group_examples() {
    assert_eq!(
        enumerate_group(&gp(1, 1, 2), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        enumerate_group(&gp(2, 1, 2), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        8
    );
    assert_eq!(
        enumerate_group(&gp(2, 2, 2), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        4
    );
    assert_eq!(
        reflections(&gp(2, 1, 2), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        4
    );
    assert_eq!(
        reflections(&gp(2, 2, 2), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        reflections(&gp(3, 1, 1), DEFAULT_GROUP_LIMIT)
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn irreducible_count_matches_class_count() {
    for g in [gp(2, 2, 2), gp(3, 3, 2), gp(4, 2, 2), gp(2, 2, 3)] {
        let classes = count_conjugacy_classes(&g, DEFAULT_GROUP_LIMIT).unwrap();
        assert_eq!(irr_labels(&g).len(), classes, "{g}");
    }
}

#[test]
fn parameter_examples() {
    let a = r(1, 3);
    let cyc = ParamsH::new(
        Rat::from_int(-1),
        vec![a.clone(), -a.clone(), a.clone(), -a],
    )
    .unwrap();
    assert!(is_p_cyclic(&cyc, 2));
    let not = ParamsH::new(
        Rat::from_int(-1),
        vec![r(1, 3), r(-1, 2), r(1, 3), r(-1, 6)],
    )
    .unwrap();
    assert!(!is_p_cyclic(&not, 2));

    let sd =
        integerize(&ParamsH::new(Rat::from_int(-1), vec![r(1, 2), r(-1, 2)]).unwrap()).unwrap();
    assert_eq!(
        sd,
        ShiftData {
            e: 2,
            s: vec![0, -1]
        }
    );
    let sd = integerize(
        &ParamsH::new(
            Rat::from_int(-1),
            vec![Rat::from_int(-3), Rat::from_int(1), Rat::from_int(2)],
        )
        .unwrap(),
    )
    .unwrap();
    assert_eq!(
        sd,
        ShiftData {
            e: 1,
            s: vec![0, 1, 3]
        }
    );

    // p-cyclic H: s repeats block by block, the offset e(H_1 + ... + H_p) vanishing.
    let h = vec![r(-1, 4), r(1, 3), r(-1, 12), r(-1, 4), r(1, 3), r(-1, 12)];
    let sd = integerize(&ParamsH::new(Rat::from_int(-1), h).unwrap()).unwrap();
    assert_eq!(
        sd,
        ShiftData {
            e: 12,
            s: vec![0, 4, 3, 0, 4, 3]
        }
    );
    assert_eq!(sd.block(3), &[0, 4, 3]);
    assert_eq!(sd.block_offsets(3), vec![0, 0]);
}

#[test]
fn rotation_examples() {
    let (orbit, stab) = orbit_and_stabilizer(&mp("(1|1)"), 2);
    assert_eq!((orbit.len(), stab), (1, 2));
    let (orbit, stab) = orbit_and_stabilizer(&mp("(2|)"), 2);
    assert_eq!((orbit.len(), stab), (2, 1));
    assert!(is_d_stuttering(&mp("(1|1)"), 2));
    assert!(!is_d_stuttering(&mp("(2|1,1)"), 2));
}

#[test]
fn cm_w_examples() {
    let one = cm_partition_w(
        2,
        1,
        &ShiftData {
            e: 1,
            s: vec![0, 0],
        },
    )
    .unwrap();
    assert_eq!(one.num_blocks(), 1);
    let two = cm_partition_w(
        2,
        1,
        &ShiftData {
            e: 1,
            s: vec![0, 5],
        },
    )
    .unwrap();
    assert_eq!(two.num_blocks(), 2);

    let sd = ShiftData {
        e: 1,
        s: vec![0, 1],
    };
    let part = cm_partition_w(2, 2, &sd).unwrap();
    let oracle = content_multiset_partition(2, 2, &sd.s);
    assert!(part.compare(&oracle).equal);
    assert_eq!(part.num_blocks(), 3);
    let labels = part.labels();
    assert!(part.same_block(index(labels, "(2|)"), index(labels, "(1|1)")));
    assert!(part.same_block(index(labels, "(2|)"), index(labels, "(|1,1)")));
}

#[test]
fn cm_k_examples() {
    let g = gp(2, 2, 2);
    let labels: Vec<String> = irr_labels(&g).iter().map(ToString::to_string).collect();
    assert_eq!(labels, ["{(|1,1)}:0", "{(|2)}:0", "{(1|1)}:0", "{(1|1)}:1"]);

    let generic = cm_partition_k_generic(&g, 1);
    assert_eq!(generic.num_blocks(), 4);
    let sd = integerize(&ParamsH::gap_witness(&g)).unwrap();
    assert!(cm_partition_k(&g, &sd).unwrap().compare(&generic).equal);

    // (2|) and (|2) share an orbit; (1,1|) lies in a different block.
    let orbit_of = |s: &str| {
        generic
            .labels()
            .iter()
            .position(|l| l.orbit == orbit_and_stabilizer(&mp(s), 2).0.first().unwrap().clone())
            .unwrap()
    };
    assert_eq!(orbit_of("(2|)"), orbit_of("(|2)"));
    assert!(!generic.same_block(orbit_of("(2|)"), orbit_of("(1,1|)")));

    let not_cyclic = ShiftData {
        e: 1,
        s: vec![0, 3],
    };
    assert!(cm_partition_k(&g, &not_cyclic).is_err());
}
