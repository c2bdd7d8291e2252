"""Generate one API reference page per module of the app package."""

from pathlib import Path

import mkdocs_gen_files

SOURCE = Path(__file__).parent.parent / 'app'
DOCS = Path('docs')


def _has_code(init_file: Path) -> bool:
    return 'def ' in init_file.read_text()


def _clean_docs() -> None:
    DOCS.mkdir(parents=True, exist_ok=True)
    for stale in DOCS.rglob('*'):
        if stale.is_file():
            stale.unlink()


_clean_docs()
nav = mkdocs_gen_files.Nav()

for path in sorted(SOURCE.rglob('*.py')):
    parts = list(path.relative_to(SOURCE).with_suffix('').parts)
    page = path.relative_to(SOURCE).with_suffix('.md')
    if parts[-1] == '__main__' or (parts[-1] == '__init__' and not _has_code(path)):
        continue
    if parts[-1] == '__init__':
        parts = parts[:-1]

    nav[parts] = page.as_posix()
    with mkdocs_gen_files.open(page, 'w') as fd:
        print(f'::: app.{".".join(parts)}', file=fd)
    mkdocs_gen_files.set_edit_path(page, Path('../') / path)

with mkdocs_gen_files.open('index.md', 'w') as index:
    index.write('# rostlab API reference\n\n')
    index.write('Galois cohomology, Rost kernels and Suslin groups over iterated Laurent series fields.\n\n')
    index.write('Build locally with `mkdocs serve` after installing the mkdocs dependency group.\n\n')
    index.writelines(nav.build_literate_nav())
