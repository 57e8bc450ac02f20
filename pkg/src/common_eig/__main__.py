"""Allow ``python -m common_eig`` to behave like the installed script."""

from .cli import main

main()
