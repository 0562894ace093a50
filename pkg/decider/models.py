# ordered-structures-qe -- decider/models.py

from django.db import models

from .theories import TheoryChoices


class Sentence(models.Model):
    """A closed sentence of the curated battery, with its hand-verified truth value."""

    class Meta:
        # relay pagination assumes ordered querysets
        ordering = ['pk']

    theory = models.CharField(max_length=16, choices=TheoryChoices.choices)
    text = models.TextField()
    truth = models.BooleanField()
    note = models.TextField(blank=True, default='')

    def __str__(self):
        return "Sentence({}, '{}')".format(self.theory, self.text)
