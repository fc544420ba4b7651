use cobordism::suites::{run, SuiteContext, SuiteName, Totals, Verdict};

#[test]
fn reports_are_deterministic() {
    let ctx = SuiteContext::builtin();
    for name in [SuiteName::Table9, SuiteName::Mass, SuiteName::Relations, SuiteName::Projections] {
        let a = run(name, &ctx);
        let b = run(name, &ctx);
        assert_eq!(a.items, b.items, "{name}");
        assert_eq!(a.totals, Totals::of(&a.items));
    }
}

#[test]
fn verdicts_serialize_in_kebab_case() {
    let v = serde_json::to_string(&Verdict::NotApplicable).unwrap();
    assert_eq!(v, "\"not-applicable\"");
    assert_eq!(Verdict::Insufficient.to_string(), "insufficient");
}

#[test]
fn all_prefixes_suite_names() {
    let ctx = SuiteContext::builtin();
    let all = run(SuiteName::All, &ctx);
    for prefix in ["corollaries/", "table9/", "mass/", "relations/", "projections/"] {
        assert!(all.group(prefix).next().is_some(), "{prefix}");
    }
}

#[test]
fn suite_names_parse() {
    for name in SuiteName::ALL {
        assert_eq!(name.as_str().parse::<SuiteName>().unwrap(), name);
    }
    assert!("nosuch".parse::<SuiteName>().is_err());
}
