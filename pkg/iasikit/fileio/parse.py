# Copyright (c) iasikit authors. All rights reserved.
from typing import List, Tuple


def list_from_file(filename: str,
                   comment: str = "#",
                   skip_blank: bool = True) -> List[Tuple[int, str]]:
    r"""Load a text file and return its meaningful lines with their 1-based
    line numbers, so that parse errors can point back into the file.

    Args:
        filename (str): Filename.
        comment (str): Everything after this marker is dropped.
        skip_blank (bool): drop lines that are empty after comment removal.

    Returns:
        list[tuple[int, str]]: (line number, stripped content) pairs.
    """
    with open(filename, "r") as f:
        return lines_from_text(f.read(), comment, skip_blank)


def lines_from_text(text: str,
                    comment: str = "#",
                    skip_blank: bool = True) -> List[Tuple[int, str]]:
    item_list = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if comment:
            line = line.split(comment, 1)[0]
        line = line.strip()
        if skip_blank and not line:
            continue
        item_list.append((lineno, line))
    return item_list
