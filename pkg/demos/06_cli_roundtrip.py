"""
Command-line runs and file round trips
======================================

Every CLI subcommand is an ordinary function call, so scripts can drive
it directly.  JSON entropy files can be summarized again by ``sweep``.
"""

import tempfile
from pathlib import Path

from oscfield.cli import main

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    main(["entropy", "--s1", "0", "--s2", "1", "--alpha", "1", "--points", "9"])

    files = []
    for s1, alpha in [(0, "1"), (5, "0.5")]:
        path = tmp / f"s1_{s1}.json"
        main(["entropy", "--s1", str(s1), "--s2", "10", "--alpha", alpha,
              "--format", "json", "-o", str(path)])
        files.append(str(path))
    main(["sweep", "--from-files", *files])

    main(["figure1", "--points", "257", "-o", str(tmp / "figure1")])
    print(sorted(p.name for p in (tmp / "figure1").iterdir())[:4], "...")
