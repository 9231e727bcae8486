"""Semilog plot of |N| against the row index, one line per column of a table."""

import math


def plot_table(spec, rows, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    real = [(label, cells) for label, cells in rows if label != "C"]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for j, col in enumerate(spec.labels()):
        xs, ys = [], []
        for n, (_, cells) in enumerate(real):
            cell = cells[j]
            if cell is not None and cell.value != 0:
                xs.append(n)
                ys.append(math.log10(abs(cell.value)))
        if xs:
            ax.plot(xs, ys, marker="o", label=col)
    ax.set_xlabel("%s (conjugate pairs)" % spec.row_prefix)
    ax.set_ylabel("log10 |N|")
    ax.set_title("%s: %s" % (spec.table_id, spec.title))
    ax.legend(fontsize="small", ncol=2)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
