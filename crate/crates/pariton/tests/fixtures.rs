use pariton::bench::{gen_family, Family};
use pariton::game::{parse_pgsolver, write_pgsolver};
use pariton::solve::Algorithm;

const FAMILY_WINNERS: [(Family, usize, &[usize], &[usize]); 8] = [
    (Family::Ladder, 1, &[], &[0, 1]),
    (Family::Ladder, 2, &[0, 2], &[1, 3]),
    (Family::Ladder, 3, &[0, 2, 4], &[1, 3, 5]),
    (Family::Ladder, 4, &[0, 2, 4, 6], &[1, 3, 5, 7]),
    (Family::Clique, 1, &[0], &[]),
    (Family::Clique, 2, &[0], &[1]),
    (Family::Clique, 3, &[0, 2], &[1]),
    (Family::Clique, 4, &[0, 2], &[1, 3]),
];

const LADDER_2: &str = "parity 3;\n0 0 0 1,2;\n1 1 1 0,3;\n2 2 0 0,3;\n3 3 1 1,2;\n";

#[test]
fn family_winners() {
    for (family, k, w0, w1) in FAMILY_WINNERS {
        let g = gen_family(family, k).unwrap();
        for algo in Algorithm::ALL {
            let res = algo.solve(&g);
            assert_eq!(res.w0.to_vec(), w0, "{algo} on {family}({k})");
            assert_eq!(res.w1.to_vec(), w1, "{algo} on {family}({k})");
        }
    }
}

#[test]
fn ladder_file() {
    assert_eq!(write_pgsolver(&gen_family(Family::Ladder, 2).unwrap()), LADDER_2);
    assert_eq!(parse_pgsolver(LADDER_2).unwrap(), gen_family(Family::Ladder, 2).unwrap());
}

#[test]
fn named_positions_and_gaps_in_ids() {
    let g = parse_pgsolver("parity 7;\n7 2 0 3 \"a\";\n3 1 1 7,3;\n").unwrap();
    assert_eq!(g.len(), 2);
    let res = Algorithm::Hpp.solve(&g);
    assert_eq!(res.w1.len(), 2);
}
