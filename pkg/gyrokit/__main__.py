from gyrokit.cli.main import main

raise SystemExit(main())
