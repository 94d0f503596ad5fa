from paraplactic.cli import main

raise SystemExit(main())
