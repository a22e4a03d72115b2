"""Run a few sessions through the command layer, then the whole corpus.

Each command returns a report; the text form is what the command line prints.

    python demos/corpus_tour.py
"""

from pathlib import Path

from dimfilter.commands import run_command
from dimfilter.corpus import corpus_run
from dimfilter.session import parse_session

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

for name, command in [("coker_column", "verify --module C --max-n 3"),
                      ("linear_column", "sn --module C --n 3"),
                      ("mixed_dimension", "hypotheses --module B"),
                      ("assumed_prime", "verify --module C --max-n 2")]:
    session = parse_session((CORPUS / "curated" / f"{name}.session").read_text(encoding="utf-8"))
    print(f"== {name}: {command}")
    print(run_command(session, command).to_text())

report = corpus_run(CORPUS)
print(report.results[-1].data)
