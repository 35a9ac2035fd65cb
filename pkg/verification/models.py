from django.db import models


class SweepRun(models.Model):
    """Archivo de reportes de barridos y verificaciones (solo con --save)."""
    MODE = (
        ('exhaustive', 'Exhaustivo'),
        ('sampled', 'Muestreado'),
        ('structured', 'Estructurado'),
        ('trials', 'Ensayos'),
        ('fixture', 'Tabla de referencia'),
    )

    name = models.CharField(max_length=50, blank=True)
    scenario = models.CharField(max_length=200)
    mode = models.CharField(max_length=20, choices=MODE)
    distribution = models.CharField(max_length=20, blank=True)
    seed = models.BigIntegerField(blank=True, null=True)
    models_checked = models.BigIntegerField(default=0)
    mismatch_count = models.BigIntegerField(default=0)
    mismatches = models.JSONField(default=list, blank=True)
    notes = models.JSONField(default=list, blank=True)
    elapsed = models.FloatField(default=0.0)
    passed = models.BooleanField(default=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    @classmethod
    def from_report(cls, report, name=''):
        """Guarda un SweepReport."""
        return cls.objects.create(
            name=name,
            scenario=report.scenario,
            mode=report.mode,
            distribution=report.distribution or '',
            seed=report.seed,
            models_checked=report.models_checked,
            mismatch_count=report.mismatch_count,
            mismatches=report.mismatches,
            notes=report.notes,
            elapsed=report.elapsed,
            passed=report.passed,
        )

    @classmethod
    def from_fixture(cls, fixture):
        failed = [step.name for step in fixture.steps if not step.passed]
        return cls.objects.create(
            name=fixture.name,
            scenario=fixture.name,
            mode='fixture',
            models_checked=len(fixture.steps),
            mismatch_count=len(failed),
            mismatches=failed,
            notes=[f'{step.name}: {step.detail}' for step in fixture.steps],
            passed=fixture.passed,
        )

    def __str__(self):
        return f'{self.mode} {self.scenario} ({self.mismatch_count} mismatches)'
