import os.path as osp

import h5py
import numpy as np
import pandas as pd

from .exc import ParameterError
from .util import format_word, parse_word
from .words import CycleSpec, GrayCycle

# Output formats
LINES = 'lines'
CSV = 'csv'
RAW = 'raw'
FORMATS = (LINES, CSV, RAW)

_EXTENSIONS = {
    '.txt': LINES,
    '.csv': CSV,
    '.raw': RAW,
    '.h5': 'hdf5',
    '.hdf5': 'hdf5',
}


def _format_for(filename):
    ext = osp.splitext(filename)[1].lower()
    try:
        return _EXTENSIONS[ext]
    except KeyError:
        raise ParameterError("Unsupported file type: {!r}".format(ext))


def stream_words(words, stream, format=LINES, flush_every=4096):
    """Write words to an open stream as they are produced.

    Parameters
    ----------
    words : Iterable[Sequence[int]]
    stream : file-like
        A text stream for ``lines`` and ``csv``, a binary stream for ``raw``.
    format : str
        ``lines`` (one rendered word per line), ``csv`` (``index,word`` with
        a header) or ``raw`` (one byte per letter, no separators).
    flush_every : int
        Flush after this many words.

    Returns
    -------
    int
        Number of words written.

    """
    if format not in FORMATS:
        raise ParameterError("unknown format {!r}".format(format))
    if format == CSV:
        stream.write('index,word\n')

    count = 0
    for count, word in enumerate(words, 1):
        if format == LINES:
            stream.write(format_word(word) + '\n')
        elif format == CSV:
            stream.write('{},{}\n'.format(count - 1, format_word(word)))
        else:
            if any(c > 255 for c in word):
                raise ParameterError("raw output holds letters up to 255 only")
            stream.write(bytes(bytearray(word)))
        if count % flush_every == 0:
            stream.flush()
    stream.flush()
    return count


def write_cycle(cycle, filename):
    """Write a materialized cycle to a file.

    The file type is determined by the extension: ``.txt`` (one word per
    line), ``.csv`` (``index,word``), ``.raw`` (one byte per letter) or
    ``.h5``/``.hdf5`` (the term matrix plus the cycle parameters as
    attributes).

    Raises
    ------
    ParameterError for an unsupported extension.

    """
    format = _format_for(filename)
    if format == 'hdf5':
        with h5py.File(filename, 'w') as f:
            dset = f.create_dataset('terms', data=cycle.terms, compression='gzip')
            for key in cycle.spec.keys():
                dset.attrs[key] = getattr(cycle.spec, key)
    elif format == CSV:
        cycle.to_frame().to_csv(filename, index=False)
    elif format == RAW:
        with open(filename, 'wb') as f:
            stream_words(cycle, f, RAW)
    else:
        with open(filename, 'w') as f:
            stream_words(cycle, f, LINES)


def read_words(filename, p=None):
    """Read the words of a ``.txt`` or ``.csv`` file as tuples of letters.

    Blank lines are ignored.

    """
    format = _format_for(filename)
    if format == CSV:
        df = pd.read_csv(filename, dtype={'word': str})
        lines = df.word.tolist()
    elif format == LINES:
        with open(filename, 'r') as f:
            lines = f.read().split('\n')
    else:
        raise ParameterError("read_words handles .txt and .csv files only")
    return [parse_word(line, p) for line in lines if line.strip()]


def read_cycle(filename, spec=None):
    """Read a cycle written by :func:`write_cycle`.

    HDF5 files carry their own parameters; text files need ``spec``.

    """
    format = _format_for(filename)
    if format == 'hdf5':
        with h5py.File(filename, 'r') as f:
            dset = f['terms']
            if spec is None:
                attrs = {key: dset.attrs[key] for key in ('p', 'n', 'k', 'variant', 'base')}
                spec = CycleSpec(int(attrs['p']), int(attrs['n']), int(attrs['k']),
                                 str(attrs['variant']), base=str(attrs['base']))
            return GrayCycle(spec, np.asarray(dset[()]))
    if spec is None:
        raise ParameterError("a CycleSpec is required to read {}".format(filename))
    if format == RAW:
        data = np.fromfile(filename, dtype=np.uint8)
        return GrayCycle(spec, data.reshape(-1, spec.n))
    return GrayCycle.from_words(read_words(filename, spec.p), spec)
