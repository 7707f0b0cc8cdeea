from sturmroots.cli import main

raise SystemExit(main())
