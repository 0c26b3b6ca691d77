from onepoint import cli


def run_cli(*argv):
    lines = []
    code = cli.main(list(argv), emit=lines.append)
    return code, lines


def test_connectify_refused():
    code, lines = run_cli("connectify", "(0,1) U [2,3]")
    assert code == 3
    assert lines == ["Refused component=[2,3]"]


def test_connectify_accepted():
    code, lines = run_cli("connectify", "(0,1) U [5,inf)")
    assert code == 0
    assert lines[0] == "connectifiable components=2"
    assert lines[1] == "filter C#0=(0,1) dir=open_right(1) anchor=1/2"
    assert lines[2] == "filter C#1=[5,inf) dir=pos_inf anchor=6"


def test_components_verb():
    code, lines = run_cli("components", "(0,1] U (1,2)")
    assert code == 0 and lines == ["C#0=(0,2)"]


def test_check_verb():
    code, lines = run_cli("check", "(0,1) U [2,3]")
    assert code == 0
    assert "space_compact=false" in lines
    assert "C#1=[2,3] compact=true" in lines
    assert any(line.startswith("locally_connected=true") for line in lines)


def test_witness_hausdorff_golden():
    code, lines = run_cli("witness", "hausdorff", "[5,inf)", "p", "20")
    assert code == 0
    assert lines == ["U = II trace=(21,inf) tails=C#0:16", "V = I trace=(19,21)"]


def test_witness_normal_golden():
    code, lines = run_cli("witness", "normal", "[5,inf)", "p", "[5,7]")
    assert code == 0
    assert lines == ["U = II trace=(15/2,inf) tails=C#0:2", "V = I trace=[5,15/2)"]


def test_witness_normal_specs():
    code, lines = run_cli("witness", "normal", "[5,inf)", "p+[10,inf)", "[5,6]")
    assert code == 0 and lines[0].startswith("U = II")
    code, lines = run_cli("witness", "normal", "(-inf,inf)", "[0,1]", "[2,3]")
    assert code == 0
    assert lines == ["U = I trace=(-inf,3/2)", "V = I trace=(3/2,inf)"]


def test_witness_on_refused_space():
    code, lines = run_cli("witness", "hausdorff", "[0,1]", "p", "1/2")
    assert code == 3 and lines == ["Refused component=[0,1]"]


def test_compactify_verb():
    code, lines = run_cli("compactify", "[0,1]")
    assert code == 3 and lines[0].startswith("Refused space=[0,1]")
    code, lines = run_cli("compactify", "(0,1)")
    assert code == 0 and lines == ["compact_extension base=(0,1)"]


def test_finite_enumerate():
    code, lines = run_cli("finite", "enumerate", "3")
    assert code == 0 and lines == ["count=29"]


def test_finite_search():
    code, lines = run_cli("finite", "search", "{},{0},{0,1}", "T0")
    assert code == 0
    assert lines[0] == "found=3"
    assert len(lines) == 4
    code, lines = run_cli("finite", "search", "{},{0},{1},{0,1}", "T2")
    assert code == 0 and lines == ["found=0"]


def test_parse_errors_exit_2():
    code, _ = run_cli("connectify", "(0,1")
    assert code == 2
    code, _ = run_cli("witness", "hausdorff", "(0,1)", "q", "1/2")
    assert code == 2
    code, _ = run_cli("finite", "search", "{0}", "T2")
    assert code == 2
    code, _ = run_cli("connectify", "empty")
    assert code == 2


def test_bad_point_arguments_exit_2():
    code, _ = run_cli("witness", "hausdorff", "(0,1)", "p", "p")
    assert code == 2
    code, _ = run_cli("witness", "hausdorff", "(0,1)", "p", "5")
    assert code == 2


def test_cli_matches_library(capsys):
    # the CLI is a thin wrapper: its lines equal the library record output
    from onepoint import Space, check_connectifiable, parse_set
    from onepoint.records import fmt_verdict

    _, lines = run_cli("connectify", "(0,1) U (2,3)")
    assert lines == fmt_verdict(check_connectifiable(Space(parse_set("(0,1) U (2,3)"))))


def test_selftest_runs_and_is_deterministic():
    code1, lines1 = run_cli("--format", "records", "selftest")
    code2, lines2 = run_cli("--format", "records", "selftest")
    assert code1 == code2 == 0
    assert lines1 == lines2
