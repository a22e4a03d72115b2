"""Corpus runner: session files ``NAME.session`` with sidecars
``NAME.expect.json``::

    {"schema": 1,
     "note": "where the expectations come from",
     "expect": [{"command": "sn --module A --n 2", "verdicts": ["false"], "exit": 0,
                 "data": [{"provenance": "complete"}]}]}

``data`` is optional; each dict lists fields that the result at that position
must carry with exactly those values.  A sidecar may instead hold
``"parse_error": [line, column]`` for a session the parser must reject.
Sessions are collected recursively and run in order of relative path.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .commands import error_result, run_command
from .errors import DimFilterError, ParseError
from .report import Report, Result, digest
from .session import parse_session


class CorpusError(DimFilterError):
    pass


def load_sidecar(path):
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise CorpusError(f"{path.name}: unreadable expectation file ({exc})") from None
    if not isinstance(data, dict) or data.get("schema") != 1:
        raise CorpusError(f"{path.name}: expectation file needs \"schema\": 1")
    if "parse_error" in data:
        pe = data["parse_error"]
        if not (isinstance(pe, list) and len(pe) == 2 and all(isinstance(v, int) for v in pe)):
            raise CorpusError(f"{path.name}: parse_error must be [line, column]")
        return data
    expect = data.get("expect")
    if not isinstance(expect, list) or not expect:
        raise CorpusError(f"{path.name}: \"expect\" must be a nonempty list")
    for item in expect:
        if not (isinstance(item, dict) and isinstance(item.get("command"), str)
                and isinstance(item.get("verdicts"), list)
                and isinstance(item.get("exit", 0), int)
                and isinstance(item.get("data", []), list)):
            raise CorpusError(f"{path.name}: malformed expectation {item!r}")
    return data


def _pairs(directory):
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusError(f"{directory}: not a directory")
    out = []
    for session in sorted(directory.rglob("*.session"),
                          key=lambda p: p.relative_to(directory).as_posix()):
        sidecar = session.with_name(session.stem + ".expect.json")
        if not sidecar.exists():
            raise CorpusError(f"{session.name}: missing sidecar {sidecar.name}")
        out.append((session, sidecar, session.relative_to(directory).as_posix()))
    return out


def run_pair(pair):
    """Results for one session file, in expectation order."""
    session_path, sidecar_path, label = pair
    expected = load_sidecar(sidecar_path)
    text = session_path.read_text(encoding="utf-8")
    try:
        session = parse_session(text)
    except ParseError as exc:
        want = expected.get("parse_error")
        got = [exc.line, exc.column]
        ok = want == got
        return [Result(f"{label}: parse", "pass" if ok else "fail", None,
                       {"expected": want, "got": got, "message": str(exc)})]
    except DimFilterError as exc:
        return [Result(f"{label}: parse", "fail", None, {"message": str(exc)})]
    if "parse_error" in expected:
        return [Result(f"{label}: parse", "fail", None,
                       {"expected": expected["parse_error"], "got": None})]
    results = []
    for item in expected["expect"]:
        rep = run_command(session, item["command"])
        got = rep.verdicts
        want_exit = item.get("exit", 0)
        mismatched = _data_mismatch(rep, item.get("data", []))
        ok = got == item["verdicts"] and rep.exit_code == want_exit and not mismatched
        data = {"expected": item["verdicts"], "got": got}
        if mismatched:
            data["data_mismatch"] = mismatched
        if rep.exit_code != want_exit:
            data["exit"] = {"expected": want_exit, "got": rep.exit_code}
        if not ok and rep.exit_code:
            data["error"] = rep.results[0].data.get("message", "")
        results.append(Result(f"{label}: {item['command']}", "pass" if ok else "fail",
                              None, data))
    return results


def _data_mismatch(rep, wanted):
    out = []
    for i, fields in enumerate(wanted):
        have = rep.results[i].data if i < len(rep.results) else {}
        for key in sorted(fields):
            if have.get(key) != fields[key]:
                out.append({"result": i, "field": key, "expected": fields[key],
                            "got": have.get(key)})
    return out


def corpus_run(directory, jobs=1):
    """Run every (session, sidecar) pair; ``exit_code`` is 1 on any mismatch."""
    report = Report(f"corpus {Path(directory).name}", "various")
    try:
        pairs = _pairs(directory)
        blob = "".join(f"{label}\n{s.read_text(encoding='utf-8')}\n{e.read_text(encoding='utf-8')}"
                       for s, e, label in pairs)
        report.input_digest = digest(blob)
        if jobs > 1 and len(pairs) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(run_pair, pairs))
        else:
            chunks = [run_pair(p) for p in pairs]
    except CorpusError as exc:
        report.results = [error_result("corpus", str(exc))]
        report.exit_code = 1
        return report
    results = [r for chunk in chunks for r in chunk]
    passed = sum(r.verdict == "pass" for r in results)
    failed = len(results) - passed
    summary = {"sessions": len(pairs), "checks": len(results),
               "passed": passed, "failed": failed}
    if not pairs:
        summary["warning"] = "no session files found"
    results.append(Result("summary", "pass" if failed == 0 else "fail", None, summary))
    report.results = results
    report.exit_code = 0 if failed == 0 else 1
    return report
