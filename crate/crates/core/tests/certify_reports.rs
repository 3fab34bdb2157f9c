use knotcert::certify::{
    certify_no_sfs, Branch, Conclusion, Family, ReportConclusion, Rule, SCHEMA_VERSION,
};
use knotcert::Error;

#[test]
fn small_grid_is_certified_and_replays() {
    for (first, q) in [(3, 3), (5, 3), (3, 5), (2, 3), (4, 3), (2, 5)] {
        let report = certify_no_sfs(first, q).unwrap();
        assert_eq!(report.schema_version, SCHEMA_VERSION);
        assert!(report.is_certified(), "P({first},{q},{q})");
        assert!(report.replay().unwrap());
        for slope in &report.slopes {
            assert!(slope.is_excluded(), "P({first},{q},{q}) at r = {}", slope.r);
            assert_eq!(slope.covered_branches(), vec![Branch::Montesinos, Branch::Seifert]);
        }
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: knotcert::certify::CertificateReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}

#[test]
fn family_shapes() {
    let odd = certify_no_sfs(3, 3).unwrap();
    assert_eq!(odd.family, Family::Odd);
    assert_eq!(odd.slopes.len(), 17);
    assert_eq!(odd.parameters.n, None);
    let zero = odd.slopes.iter().find(|s| s.r == 0).unwrap();
    assert_eq!(zero.homology_order, 0);
    assert!(zero.verdicts.iter().any(|v| v.rule == Rule::ToroidalSlope));

    let even = certify_no_sfs(4, 5).unwrap();
    assert_eq!(even.family, Family::Even);
    assert_eq!(even.parameters.n, Some(2));
    let rs: Vec<i64> = even.slopes.iter().map(|s| s.r).collect();
    assert_eq!(rs, vec![19, 21]);
    for s in &even.slopes {
        assert_eq!(s.homology_order, s.r as u64);
        assert!(s.verdicts.iter().all(|v| v.rule != Rule::MontesinosLinkBridge));
    }
}

#[test]
fn odd_slopes_carry_knot_rules_and_even_slopes_link_rules() {
    let report = certify_no_sfs(5, 3).unwrap();
    for s in report.slopes.iter().filter(|s| s.r != 0) {
        let rules: Vec<Rule> = s.verdicts.iter().filter(|v| v.is_excluded()).map(|v| v.rule).collect();
        if s.r % 2 == 0 {
            assert!(rules.contains(&Rule::MontesinosLinkBridge), "r = {}", s.r);
            assert!(rules.contains(&Rule::SeifertLinkTaxonomy), "r = {}", s.r);
        } else {
            assert!(rules.contains(&Rule::MontesinosKnot), "r = {}", s.r);
            assert!(rules.contains(&Rule::TorusKnotDetGenus), "r = {}", s.r);
        }
    }
}

#[test]
fn tampered_report_fails_replay() {
    let mut report = certify_no_sfs(3, 3).unwrap();
    report.slopes[0].verdicts[0].conclusion = Conclusion::Inconclusive;
    assert!(!report.replay().unwrap());
    let mut report = certify_no_sfs(3, 3).unwrap();
    report.conclusion = ReportConclusion::Inconclusive;
    assert!(!report.replay().unwrap());
}

#[test]
fn bad_parameters() {
    assert!(matches!(certify_no_sfs(3, 2), Err(Error::InvalidArgument(_))));
    assert!(matches!(certify_no_sfs(1, 3), Err(Error::InvalidArgument(_))));
    assert!(certify_no_sfs(3, 1).is_err());
}
